#include <doctest.h>

#include "pbwkit/error.hpp"
#include "pbwkit/quadratic/koszul.hpp"
#include "presentations.hpp"

using namespace fixtures;
using namespace pbwkit::quadratic;
using pbwkit::ErrorCode;

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Plain k^n coordinates: the span of x (x) r (x) y inside (k^n)^{(x) deg}
// for all unit words x of length i.
exactlin::Subspace placed(FieldSpec f, std::size_t n, const std::vector<Vector>& rel, int deg, int i) {
  const int j = deg - 2 - i;
  const std::size_t nx = ipow(n, i), ny = ipow(n, j), amb = ipow(n, deg);
  std::vector<Vector> gens;
  for (std::size_t x = 0; x < nx; ++x)
    for (const auto& r : rel)
      for (std::size_t y = 0; y < ny; ++y) {
        Vector v(amb, f.zero());
        for (std::size_t c = 0; c < n * n; ++c) v[(x * n * n + c) * ny + y] = r[c];
        gens.push_back(v);
      }
  return exactlin::Subspace::span(f, amb, gens);
}

exactlin::Subspace brute_K(FieldSpec f, std::size_t n, const std::vector<Vector>& rel, int deg) {
  auto k = placed(f, n, rel, deg, 0);
  for (int i = 1; i <= deg - 2; ++i) k = exactlin::intersect(k, placed(f, n, rel, deg, i));
  return k;
}

// dim T_n - dim sum_i T_i R T_{n-2-i}, summing every placement at once.
std::size_t quotient_rank_dim(const TensorPowers& t, const QuadraticPresentation& p, int n) {
  if (n < 2) return t.dim(n);
  SparseEchelon all(p.field(), t.dim(n), true);
  for (int i = 0; i <= n - 2; ++i) {
    auto piece = relation_piece(t, p, n, i);
    for (const auto& [pivot, row] : piece.rows()) all.insert(row);
  }
  return t.dim(n) - all.rank();
}

}  // namespace

TEST_CASE("graded pieces of the polynomial ring") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
    auto b = graded_pieces(polynomial(f, 2), 6);
    for (int n = 0; n <= 6; ++n) CHECK(b.dim(n) == static_cast<std::size_t>(n + 1));
    auto b3 = graded_pieces(polynomial(f, 3), 5);
    for (int n = 0; n <= 5; ++n) CHECK(b3.dim(n) == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
  }
}

TEST_CASE("graded pieces of k[x,y] # kZ/2") {
  FieldSpec f = FieldSpec::rationals();
  auto p = sympl_z2(f);
  CHECK(p.R().dim() == 2);
  auto b = graded_pieces(p, 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(b.dim(n) == static_cast<std::size_t>(2 * (n + 1)));
    CHECK(quotient_rank_dim(b.tensor(), p, n) == b.dim(n));
  }
  CHECK(b.dim(0) == p.S().dim());
  CHECK(b.dim(1) == p.M().dim());
  // Induced actions satisfy the bimodule laws.
  for (int n = 0; n <= 4; ++n) CHECK_FALSE(b.bimodule(n).violation().has_value());
  // Associativity of the induced product on basis triples.
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k + i + j <= 4 && k <= 2; ++k)
        for (std::size_t a = 0; a < b.dim(i); ++a)
          for (std::size_t c = 0; c < b.dim(j); ++c)
            for (std::size_t e = 0; e < b.dim(k); ++e) {
              auto x = SparseVec::unit(a, f.one()), y = SparseVec::unit(c, f.one()), z = SparseVec::unit(e, f.one());
              CHECK(b.multiply(i + j, b.multiply(i, x, j, y), k, z) == b.multiply(i, x, j + k, b.multiply(j, y, k, z)));
            }
  auto mm = b.multiplication_matrix(1, 1);
  CHECK(mm.rows() == b.dim(2));
  CHECK(exactlin::rank(mm) == b.dim(2));
}

TEST_CASE("degenerate relations") {
  FieldSpec f = FieldSpec::rationals();
  auto m = vector_space(f, 2);
  auto zero = QuadraticPresentation::make(m, {});
  auto full = QuadraticPresentation::make(
      m, {vec(f, {1, 0, 0, 0}), vec(f, {0, 1, 0, 0}), vec(f, {0, 0, 1, 0}), vec(f, {0, 0, 0, 1})});
  auto bz = graded_pieces(zero, 5);
  auto bf = graded_pieces(full, 5);
  for (int n = 0; n <= 5; ++n) CHECK(bz.dim(n) == ipow(2, n));
  CHECK(bf.dim(1) == 2);
  for (int n = 2; n <= 5; ++n) CHECK(bf.dim(n) == 0);
  auto kz = koszul_generators(zero, 5);
  for (int n = 2; n <= 5; ++n) CHECK(kz.dim(n) == 0);
  auto cz = koszul_resolution(zero, 5);
  for (int d = 0; d <= 5; ++d) {
    CHECK(cz.exact(d));
    CHECK_FALSE(cz.d_squared_failure(d).has_value());
  }
  CHECK(is_koszul(zero, 5).overall() == pbwkit::Status::Pass);
  // R = everything: K_n = T_n, B_n = 0 beyond degree 1; exact as well.
  auto kf = koszul_generators(full, 4);
  for (int n = 0; n <= 4; ++n) CHECK(kf.dim(n) == ipow(2, n));
  CHECK(is_koszul(full, 4).overall() == pbwkit::Status::Pass);
}

TEST_CASE("R must be a sub-bimodule") {
  FieldSpec f = FieldSpec::rationals();
  // Only the t = 1 component of the smash commutator: not closed under g.
  auto rel = smash_commutators(f, 2, 2);
  try {
    QuadraticPresentation::from_ambient(sympl_z2_module(f), {rel[0]});
    FAIL("expected RNotSubbimodule");
  } catch (const pbwkit::Error& e) {
    CHECK(e.code() == ErrorCode::RNotSubbimodule);
    CHECK_FALSE(e.witness().empty());
  }
}

TEST_CASE("Koszul generators against brute-force intersections") {
  FieldSpec f = FieldSpec::rationals();
  for (std::size_t n : {2u, 3u}) {
    auto p = polynomial(f, n);
    TensorPowers t(p.M(), 4);
    auto k = koszul_generators(t, p, 4);
    for (int d = 2; d <= 4; ++d) CHECK(k.K[d] == brute_K(f, n, commutators(f, n), d));
    if (n == 2) {
      CHECK(k.dim(2) == 1);
      CHECK(k.dim(3) == 0);
    } else {
      CHECK(k.dim(2) == 3);
      CHECK(k.dim(3) == 1);
      CHECK(k.dim(4) == 0);
    }
  }
}

TEST_CASE("K_{n+1} = K_n M cap T_{n-1} R") {
  FieldSpec f = FieldSpec::rationals();
  for (const auto& p : {polynomial(f, 3), sympl_z2(f), sympl_z2(FieldSpec::prime(5))}) {
    TensorPowers t(p.M(), 5);
    auto k = koszul_generators(t, p, 5);
    auto kr = koszul_generators_recursive(t, p, 5);
    for (int n = 0; n <= 5; ++n) CHECK(k.K[n] == kr.K[n]);
    // K_{n+1} inside M K_n, and K_n closed under both actions.
    for (int n = 1; n < 5; ++n) {
      std::vector<Vector> mk;
      for (const auto& v : k.basis[n])
        for (std::size_t l = 0; l < p.M().dim(); ++l)
          mk.push_back(t.multiply(1, SparseVec::unit(l, f.one()), n, v).to_dense(p.field(), t.dim(n + 1)));
      CHECK(exactlin::Subspace::span(p.field(), t.dim(n + 1), mk).contains(k.K[n + 1]));
    }
    for (int n = 0; n <= 5; ++n) CHECK_NOTHROW(t.bimodule(n).restrict_to(k.K[n]));
  }
}

TEST_CASE("Koszul resolution strands") {
  FieldSpec f = FieldSpec::rationals();
  for (const auto& p : {polynomial(f, 2), sympl_z2(f)}) {
    GradedAlgebra b(p, 6);
    auto k = koszul_generators(b.tensor(), p, 6);
    auto cx = koszul_resolution(b, k, 6);
    for (int d = 0; d <= 6; ++d) {
      CHECK_FALSE(cx.d_squared_failure(d).has_value());
      CHECK(cx.exact(d));
      CHECK(cx.euler_characteristic(d) == 0);
      // Only K_0, K_1, K_2 contribute: length-2 resolution.
      const auto& s = cx.strand(d);
      for (std::size_t pos = 4; pos < s.terms.size(); ++pos) CHECK(s.terms[pos].dim == 0);
      if (d >= 1) {
        long long alt = 0;
        for (std::size_t pos = 2; pos < s.terms.size(); ++pos)
          alt += (pos % 2 == 0 ? 1 : -1) * static_cast<long long>(s.terms[pos].dim);
        CHECK(static_cast<long long>(b.dim(d)) == alt);
      }
    }
  }
}

TEST_CASE("is_koszul verdicts") {
  FieldSpec f = FieldSpec::rationals();
  CHECK(is_koszul(sympl_z2(f), 6).overall() == pbwkit::Status::Pass);
  // k<x,y>/(x (x) x) is a Koszul monomial algebra.
  auto mono = QuadraticPresentation::from_ambient(vector_space(f, 2), {vec(f, {1, 0, 0, 0})});
  CHECK(is_koszul(mono, 6).overall() == pbwkit::Status::Pass);
  // k[x,y,z]/(xy - yx, yz - zy) without the xz relation is k<x,z>[y].
  auto all = commutators(f, 3);
  auto partial = QuadraticPresentation::from_ambient(vector_space(f, 3), {all[0], all[2]});
  auto v = is_koszul(partial, 5);
  CHECK(v.overall() == pbwkit::Status::Pass);
  CHECK(v.find("koszul complex: exact in degree 5") != nullptr);
  // k<x,y,z>/(xx + zx, yy - yz, xx - xz): a syzygy of the relations in
  // degree 4 is not generated linearly.
  auto bad = QuadraticPresentation::from_ambient(
      vector_space(f, 3), {vec(f, {1, 0, 0, 0, 0, 0, 1, 0, 0}), vec(f, {0, 0, 0, 0, -1, 1, 0, 0, 0}),
                           vec(f, {1, 0, -1, 0, 0, 0, 0, 0, 0})});
  CHECK(is_koszul(bad, 3).overall() == pbwkit::Status::Pass);
  auto rb = is_koszul(bad, 5);
  CHECK(rb.overall() == pbwkit::Status::Fail);
  const auto* c4 = rb.find("koszul complex: exact in degree 4");
  REQUIRE(c4 != nullptr);
  CHECK(c4->status == pbwkit::Status::Fail);
  CHECK(c4->witness.find("K_2(x)B_2") != std::string::npos);
  CHECK(rb.passed("koszul complex: exact in degree 3"));
}

TEST_CASE("bimodule complex") {
  FieldSpec f = FieldSpec::rationals();
  for (const auto& p : {polynomial(f, 2), sympl_z2(f)}) {
    GradedAlgebra b(p, 5);
    auto k = koszul_generators(b.tensor(), p, 5);
    auto cx = bimodule_complex(b, k, 5);
    for (int d = 0; d <= 5; ++d) {
      CHECK_FALSE(cx.d_squared_failure(d).has_value());
      CHECK(cx.exact(d));
    }
    // Degree 0: B_0 (x) B_0 -> B_0 is the multiplication of S, surjective.
    const auto& s0 = cx.strand(0);
    CHECK(s0.terms[0].dim == p.S().dim());
    CHECK(exactlin::rank(s0.diffs[1]) == p.S().dim());
  }
}

TEST_CASE("ambient cap") {
  FieldSpec f = FieldSpec::rationals();
  const auto saved = ambient_cap();
  set_ambient_cap(20);
  try {
    TensorPowers t(vector_space(f, 3), 4);
    FAIL("expected CapExceeded");
  } catch (const pbwkit::Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  set_ambient_cap(saved);
}
