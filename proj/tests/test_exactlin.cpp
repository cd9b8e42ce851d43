#include <random>

#include "doctest.h"
#include "pbwkit/error.hpp"
#include "pbwkit/exactlin/kernels.hpp"
#include "pbwkit/exactlin/linalg.hpp"
#include "pbwkit/exactlin/sparse.hpp"

using namespace pbwkit;
using namespace pbwkit::exactlin;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Matrix mat(FieldSpec f, std::vector<std::vector<long long>> rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = f.from_int(rows[r][c]);
  return m;
}

Vector vec(FieldSpec f, std::vector<long long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

Matrix random_matrix(FieldSpec f, std::size_t r, std::size_t c, std::mt19937_64& rng, int sparsity = 0) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<int> coin(0, sparsity);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) == 0) m(i, j) = f.random(rng, 3);
  return m;
}

// Every vector of GF(p)^n, in lexicographic order.
std::vector<Vector> all_vectors(FieldSpec f, std::size_t n) {
  std::vector<Vector> out{Vector{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> next;
    for (const auto& v : out)
      for (std::uint32_t a = 0; a < f.p; ++a) {
        Vector w = v;
        w.push_back(f.from_int(a));
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("scalar arithmetic stays exact across the int64 boundary") {
  Scalar big = Scalar(4611686018427387904LL);  // 2^62
  Scalar sq = big * big;
  CHECK(sq.to_mpq() == mpq_class("21267647932558653966460912964485513216"));
  CHECK((sq / big) == big);
  CHECK(((sq / big) - big).is_zero());
  Scalar third = Scalar::rational(1, 3);
  CHECK((third + third + third).is_one());
  CHECK((Scalar::rational(-6, 4)).to_string() == "-3/2");
  CHECK_THROWS_AS(Scalar().inverse(), Error);
}

TEST_CASE("prime field residues") {
  FieldSpec f = FieldSpec::prime(7);
  CHECK((f.from_int(3) * f.from_int(5)) == f.from_int(1));
  CHECK((f.from_int(3).inverse()) == f.from_int(5));
  CHECK((-f.from_int(2)) == f.from_int(5));
  CHECK(f.parse("1/2") == f.from_int(4));
  CHECK_THROWS_AS(FieldSpec::prime(15), Error);
  CHECK_THROWS_AS(f.parse("1/7"), Error);
}

TEST_CASE("random rationals satisfy field axioms") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Scalar a = Scalar::rational(static_cast<long long>(rng() % 2000001) - 1000000, 1 + rng() % 999);
    Scalar b = Scalar::rational(static_cast<long long>(rng() % 2001) - 1000, 1 + rng() % 99999);
    Scalar c = Scalar::rational(static_cast<long long>(rng() % 20000001), 1 + rng() % 7);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("rref examples") {
  auto id = Matrix::identity(Q, 3);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  auto z = rref(Matrix(Q, 2, 4));
  CHECK(z.reduced.is_zero());
  CHECK(z.pivots.empty());

  auto h = rref(mat(Q, {{2, 4}, {1, 2}}));
  CHECK(h.reduced == mat(Q, {{1, 2}, {0, 0}}));
  CHECK(h.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix::identity(Q, 4)).dim() == 0);
  CHECK(kernel(Matrix(Q, 2, 3)) == Subspace::full(Q, 3));

  FieldSpec f2 = FieldSpec::prime(2);
  Subspace k = kernel(mat(f2, {{1, 1}}));
  // Brute force: the solutions of x + y = 0 in GF(2)^2 are 00 and 11.
  std::vector<Vector> sols;
  for (const auto& v : all_vectors(f2, 2))
    if ((v[0] + v[1]).is_zero()) sols.push_back(v);
  CHECK(sols.size() == 2);
  CHECK(k.dim() == 1);
  for (const auto& v : sols) CHECK(k.contains(v));
  CHECK(k == Subspace::span(f2, 2, {vec(f2, {1, 1})}));
}

TEST_CASE("kernel agrees with enumeration over small prime fields") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    FieldSpec f = FieldSpec::prime(p);
    std::size_t n = p == 2 ? 6 : (p == 3 ? 5 : 4);
    auto vectors = all_vectors(f, n);
    for (int t = 0; t < 10; ++t) {
      Matrix m = random_matrix(f, 3, n, rng, 1);
      Subspace k = kernel(m);
      std::size_t count = 0;
      for (const auto& v : vectors) {
        bool zero = is_zero(m.apply(v));
        CHECK(zero == k.contains(v));
        count += zero;
      }
      std::size_t expect = 1;
      for (std::size_t i = 0; i < k.dim(); ++i) expect *= p;
      CHECK(count == expect);
    }
  }
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(5);
  for (FieldSpec f : {Q, FieldSpec::prime(101), FieldSpec::prime(2)}) {
    for (int t = 0; t < 30; ++t) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
      Matrix m = random_matrix(f, r, c, rng, 2);
      Subspace k = kernel(m);
      CHECK(rank(m) + k.dim() == c);
      for (const auto& v : k.basis_vectors()) CHECK(is_zero(m.apply(v)));
    }
  }
}

TEST_CASE("intersect examples and algebraic laws") {
  auto e = [](std::size_t i) { return unit_vector(Q, 3, i); };
  Subspace a = Subspace::span(Q, 3, {e(0), e(1)});
  Subspace b = Subspace::span(Q, 3, {e(1), e(2)});
  CHECK(intersect(a, b) == Subspace::span(Q, 3, {e(1)}));
  CHECK(intersect(Subspace::full(Q, 3), b) == b);
  Subspace l1 = Subspace::span(Q, 2, {vec(Q, {1, 0})});
  Subspace l2 = Subspace::span(Q, 2, {vec(Q, {1, 1})});
  CHECK(intersect(l1, l2).dim() == 0);
  CHECK_THROWS_AS(intersect(a, l1), Error);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 5;
    auto rnd = [&] { return Subspace::row_space(random_matrix(Q, 1 + rng() % 4, n, rng, 1)); };
    Subspace x = rnd(), y = rnd(), z = rnd();
    CHECK(intersect(x, y) == intersect(y, x));
    CHECK(intersect(intersect(x, y), z) == intersect(x, intersect(y, z)));
    CHECK(intersect(x, x) == x);
    CHECK(intersect(x, y).dim() == x.dim() + y.dim() - sum(x, y).dim());
  }
}

TEST_CASE("solve_affine and complement") {
  Vector b = vec(Q, {3, -1, 2});
  CHECK(solve_affine(Matrix::identity(Q, 3), b) == b);
  CHECK_FALSE(solve_affine(mat(Q, {{1, 1}, {1, 1}}), vec(Q, {0, 1})).has_value());
  Subspace line = Subspace::span(Q, 2, {vec(Q, {1, 1})});
  CHECK(line.complement() == std::vector<std::size_t>{1});

  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    Matrix m = random_matrix(Q, 4, 6, rng, 1);
    Vector x = random_vector(Q, 6, rng);
    auto y = solve_affine(m, m.apply(x));
    REQUIRE(y.has_value());
    CHECK(m.apply(*y) == m.apply(x));
  }
}

TEST_CASE("inverse") {
  Matrix m = mat(Q, {{2, 1}, {1, 1}});
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv * m) == Matrix::identity(Q, 2));
  CHECK_FALSE(inverse(mat(Q, {{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("mod-p row kernels: vector variant equals portable reference") {
  if (kernels::detected_isa() != kernels::Isa::Avx2) return;
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u, 65521u, 1000003u, (1u << 26) - 5}) {
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 33u}) {
      std::vector<std::uint32_t> dst(n), src(n);
      for (auto& x : dst) x = static_cast<std::uint32_t>(rng() % p);
      for (auto& x : src) x = static_cast<std::uint32_t>(rng() % p);
      if (n) {
        dst[0] = p - 1;
        src[0] = p - 1;
      }
      for (std::uint32_t c : {0u, 1u, p - 1, static_cast<std::uint32_t>(rng() % p)}) {
        auto a = dst, b = dst;
        kernels::portable::axpy_mod(a.data(), src.data(), c, p, n);
        kernels::avx2::axpy_mod(b.data(), src.data(), c, p, n);
        CHECK(a == b);
        kernels::portable::scale_mod(a.data(), c, p, n);
        kernels::avx2::scale_mod(b.data(), c, p, n);
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("prime-field rref matches generic elimination under both kernels") {
  std::mt19937_64 rng(23);
  const auto saved = kernels::active_isa();
  for (std::uint32_t p : {2u, 7u, 32749u}) {
    FieldSpec f = FieldSpec::prime(p);
    for (int t = 0; t < 20; ++t) {
      Matrix m = random_matrix(f, 1 + rng() % 9, 1 + rng() % 13, rng, 1);
      RrefResult ref = rref_generic(m);
      for (auto isa : {kernels::Isa::Scalar, kernels::Isa::Avx2}) {
        kernels::set_active_isa(isa);
        RrefResult got = rref(m);
        CHECK(got.reduced == ref.reduced);
        CHECK(got.pivots == ref.pivots);
      }
    }
  }
  kernels::set_active_isa(saved);
}

TEST_CASE("sparse echelon agrees with dense rank and gives a normal form") {
  std::mt19937_64 rng(29);
  for (FieldSpec f : {Q, FieldSpec::prime(3)}) {
    for (int t = 0; t < 25; ++t) {
      Matrix m = random_matrix(f, 1 + rng() % 7, 8, rng, 2);
      SparseEchelon e(f, 8);
      for (std::size_t r = 0; r < m.rows(); ++r) e.insert(SparseVec::from_dense(m.row(r)));
      CHECK(e.rank() == rank(m));
      Subspace s = Subspace::row_space(m);
      Vector v = random_vector(f, 8, rng);
      CHECK(e.contains(SparseVec::from_dense(v)) == s.contains(v));
      // Fully reduced rows are exactly the dense RREF rows.
      std::size_t i = 0;
      for (const auto& [pivot, row] : e.rows()) {
        CHECK(pivot == s.pivots()[i]);
        CHECK(row.to_dense(f, 8) == s.basis_vector(i));
        ++i;
      }
      Quotient quo(e);
      CHECK(quo.dim() + e.rank() == 8);
      // project(lift(q)) = q, and relations project to zero.
      for (std::size_t q = 0; q < quo.dim(); ++q)
        CHECK(quo.project(SparseVec::unit(quo.lift_index(q), f.one())) == SparseVec::unit(q, f.one()));
      for (const auto& [pivot, row] : e.rows()) CHECK(quo.project(row).empty());
    }
  }
}

TEST_CASE("sparse matrix composition matches dense product") {
  std::mt19937_64 rng(31);
  Matrix a = random_matrix(Q, 4, 5, rng, 1), b = random_matrix(Q, 5, 3, rng, 1);
  CHECK(SparseMatrix::from_dense(a).compose(SparseMatrix::from_dense(b)).to_dense() == a * b);
  CHECK(rank(SparseMatrix::from_dense(a)) == rank(a));
}

TEST_CASE("solve_sparse agrees with dense solve") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 30; ++t) {
    Matrix m = random_matrix(Q, 5, 7, rng, 2);
    Vector x = random_vector(Q, 7, rng);
    Vector b = m.apply(x);
    std::vector<SparseVec> rows;
    for (std::size_t r = 0; r < 5; ++r) rows.push_back(SparseVec::from_dense(m.row(r)));
    auto y = solve_sparse(Q, 7, rows, b);
    REQUIRE(y.has_value());
    CHECK(m.apply(*y) == b);
  }
  std::vector<SparseVec> rows{SparseVec::from_dense(vec(Q, {1, 1})), SparseVec::from_dense(vec(Q, {2, 2}))};
  CHECK_FALSE(solve_sparse(Q, 2, rows, {Scalar(1), Scalar(3)}).has_value());
}

TEST_CASE("solve_sparse_many matches one solve per right-hand side") {
  std::mt19937_64 rng(41);
  const FieldSpec f = FieldSpec::prime(7);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(f, 6, 8, rng, 3);
    std::vector<SparseVec> rows;
    for (std::size_t r = 0; r < 6; ++r) rows.push_back(SparseVec::from_dense(m.row(r)));
    std::vector<std::vector<Scalar>> rhs;
    for (int j = 0; j < 4; ++j) rhs.push_back(m.apply(random_vector(f, 8, rng)));
    auto many = solve_sparse_many(f, 8, rows, rhs);
    REQUIRE(many.has_value());
    for (int j = 0; j < 4; ++j) CHECK((*many)[j] == *solve_sparse(f, 8, rows, rhs[j]));
  }
  std::vector<SparseVec> rows{SparseVec::from_dense(vec(Q, {1, 1})), SparseVec::from_dense(vec(Q, {2, 2}))};
  CHECK_FALSE(solve_sparse_many(Q, 2, rows, {{Scalar(1), Scalar(2)}, {Scalar(1), Scalar(3)}}).has_value());
}
