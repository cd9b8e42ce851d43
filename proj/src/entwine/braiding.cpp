#include "pbwkit/entwine/braiding.hpp"

#include <random>

#include "pbwkit/error.hpp"

namespace pbwkit::entwine {

namespace {

std::string inst(const char* a, std::size_t i) { return std::string(a) + std::to_string(i); }

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

Braiding Braiding::make(FiniteAlgebra s, std::size_t dim_v, const Matrix& psi) {
  const std::size_t n = s.dim() * dim_v;
  if (psi.rows() != n || psi.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "braiding matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  Braiding b;
  b.s_ = std::move(s);
  b.dv_ = dim_v;
  Matrix c(b.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) c(r, k) = b.field().coerce(psi(r, k));
  b.psi_ = SparseMatrix::from_dense(c);
  b.bijective_ = exactlin::rank(c) == n;
  return b;
}

Braiding Braiding::twist(FiniteAlgebra s, std::size_t dim_v) {
  const FieldSpec f = s.field();
  const std::size_t ds = s.dim(), n = ds * dim_v;
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t v = 0; v < dim_v; ++v) m(v * ds + i, i * dim_v + v) = f.one();
  return make(std::move(s), dim_v, m);
}

Braiding Braiding::group_action(FiniteAlgebra s, const std::vector<Matrix>& action) {
  const FieldSpec f = s.field();
  const std::size_t ds = s.dim();
  if (action.size() != ds) throw Error(ErrorCode::DimensionMismatch, "one action matrix per group element");
  const std::size_t dv = action[0].rows(), n = ds * dv;
  Matrix m(f, n, n);
  for (std::size_t g = 0; g < ds; ++g)
    for (std::size_t v = 0; v < dv; ++v)
      for (std::size_t w = 0; w < dv; ++w) m(w * ds + g, g * dv + v) = f.coerce(action[g](w, v));
  return make(std::move(s), dv, m);
}

VerdictReport check_braiding(const Braiding& psi) {
  VerdictReport r;
  r.title = "braiding";
  const FiniteAlgebra& s = psi.S();
  const std::size_t ds = s.dim(), dv = psi.dim_v();
  std::string w1;
  for (std::size_t a = 0; a < ds && w1.empty(); ++a)
    for (std::size_t b = 0; b < ds && w1.empty(); ++b)
      for (std::size_t v = 0; v < dv && w1.empty(); ++v) {
        SparseBuilder lhs, rhs;
        for (const auto& e : s.product_sparse(a, b)) lhs.add(psi.apply(e.index, v), e.value);
        for (const auto& e : psi.apply(b, v)) {
          const std::size_t v1 = e.index / ds, b1 = e.index % ds;
          for (const auto& g : psi.apply(a, v1)) {
            const std::size_t v2 = g.index / ds, a1 = g.index % ds;
            for (const auto& p : s.product_sparse(a1, b1)) rhs.add(v2 * ds + p.index, e.value * g.value * p.value);
          }
        }
        if (lhs.finish() != rhs.finish()) w1 = inst("s=e", a) + inst(", t=e", b) + inst(", v=v", v);
      }
  r.add("multiplicative in S", w1.empty(), "Psi(st (x) v) = (1 (x) mu)(Psi (x) 1)(s (x) Psi(t (x) v))", w1);
  std::string w2;
  const SparseVec unit = SparseVec::from_dense(s.unit());
  for (std::size_t v = 0; v < dv && w2.empty(); ++v) {
    SparseBuilder lhs;
    for (const auto& e : unit) lhs.add(psi.apply(e.index, v), e.value);
    if (lhs.finish() != unit.shifted(v * ds)) w2 = inst("v=v", v);
  }
  r.add("unital", w2.empty(), "Psi(1 (x) v) = v (x) 1", w2);
  r.notes.push_back(psi.bijective() ? "Psi is bijective" : "Psi is not bijective");
  return r;
}

Bimodule bimodule_from_braiding(const Braiding& psi) {
  const FiniteAlgebra& s = psi.S();
  const FieldSpec f = psi.field();
  const std::size_t ds = s.dim(), dv = psi.dim_v(), d = ds * dv;
  std::vector<SparseMatrix> left(ds, SparseMatrix(f, d, d)), right(ds, SparseMatrix(f, d, d));
  for (std::size_t a = 0; a < ds; ++a)
    for (std::size_t v = 0; v < dv; ++v)
      for (std::size_t t = 0; t < ds; ++t) {
        SparseBuilder l, r;
        for (const auto& e : psi.apply(a, v))
          for (const auto& p : s.product_sparse(e.index % ds, t)) l.add((e.index / ds) * ds + p.index, e.value * p.value);
        for (const auto& p : s.product_sparse(t, a)) r.add(v * ds + p.index, p.value);
        left[a].set_column(v * ds + t, l.finish());
        right[a].set_column(v * ds + t, r.finish());
      }
  return Bimodule::make(s, d, std::move(left), std::move(right));
}

FreeRightBraiding braiding_from_bimodule(const Bimodule& m, const std::optional<Matrix>& phi_in) {
  const FiniteAlgebra& s = m.algebra();
  const FieldSpec f = m.field();
  const std::size_t ds = s.dim(), dm = m.dim();
  if (dm % ds != 0)
    throw Error(ErrorCode::NotFreeRight, "dim M = " + std::to_string(dm) + " is not a multiple of dim S = " +
                                             std::to_string(ds));
  const std::size_t dv = dm / ds;
  // iota(v (x) t) = m_v t for chosen generators m_v.
  auto iota_from = [&](const std::vector<Vector>& gens) {
    Matrix iota(f, dm, dm);
    for (std::size_t v = 0; v < dv; ++v) {
      SparseVec g = SparseVec::from_dense(gens[v]);
      for (std::size_t t = 0; t < ds; ++t) {
        SparseVec col = m.right(t).apply(g);
        for (const auto& e : col) iota(e.index, v * ds + t) = e.value;
      }
    }
    return iota;
  };
  Matrix phi;
  if (phi_in) {
    if (phi_in->rows() != dm || phi_in->cols() != dm)
      throw Error(ErrorCode::NotFreeRight, "phi must be a square matrix of size dim M");
    phi = *phi_in;
    if (!exactlin::is_invertible(phi)) throw Error(ErrorCode::NotFreeRight, "phi is not invertible");
    // phi(m t) = phi(m) t
    for (std::size_t t = 0; t < ds; ++t)
      for (std::size_t c = 0; c < dm; ++c) {
        Vector lhs = phi.apply(m.right(t).apply(exactlin::unit_vector(f, dm, c)));
        Vector img = phi.column(c), rhs(dm, f.zero());
        for (std::size_t i = 0; i < dm; ++i)
          if (!img[i].is_zero())
            for (const auto& p : s.product_sparse(i % ds, t)) rhs[(i / ds) * ds + p.index] += img[i] * p.value;
        if (lhs != rhs)
          throw Error(ErrorCode::NotFreeRight, "phi is not right linear at basis vector " + std::to_string(c) +
                                                   " and e" + std::to_string(t));
      }
  } else {
    std::optional<Matrix> inv;
    // Greedy choice among basis vectors first, then seeded random generators.
    std::vector<Vector> gens;
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < dm && gens.size() < dv; ++c) {
      std::vector<Vector> trial = cols;
      for (std::size_t t = 0; t < ds; ++t) trial.push_back(m.right(t).apply(exactlin::unit_vector(f, dm, c)));
      if (exactlin::Subspace::span(f, dm, trial).dim() == trial.size()) {
        gens.push_back(exactlin::unit_vector(f, dm, c));
        cols = std::move(trial);
      }
    }
    if (gens.size() == dv) inv = exactlin::inverse(iota_from(gens));
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 200 && !inv; ++trial) {
      std::vector<Vector> g;
      for (std::size_t v = 0; v < dv; ++v) g.push_back(exactlin::random_vector(f, dm, rng));
      inv = exactlin::inverse(iota_from(g));
    }
    if (!inv) throw Error(ErrorCode::NotFreeRight, "no free right basis of M over S found (200 seeded trials)");
    phi = *inv;
  }
  auto iota = exactlin::inverse(phi);
  Matrix psi(f, dm, dm);
  for (std::size_t a = 0; a < ds; ++a)
    for (std::size_t v = 0; v < dv; ++v) {
      Vector mv = iota->apply([&] {
        Vector x(dm, f.zero());
        for (std::size_t i = 0; i < ds; ++i) x[v * ds + i] = s.unit()[i];
        return x;
      }());
      Vector img = phi.apply(m.left(a).apply(mv));
      for (std::size_t r = 0; r < dm; ++r) psi(r, a * dv + v) = img[r];
    }
  return {Braiding::make(s, dv, psi), phi};
}

TensorBraiding::TensorBraiding(Braiding psi, int n_max) : psi_(std::move(psi)) {
  const std::size_t ds = psi_.S().dim(), dv = psi_.dim_v();
  const FieldSpec f = psi_.field();
  table_.resize(n_max + 1);
  for (std::size_t s = 0; s < ds; ++s) table_[0].push_back(SparseVec::unit(s, f.one()));
  for (int n = 1; n <= n_max; ++n) {
    const std::size_t wn = ipow(dv, n), wp = ipow(dv, n - 1);
    table_[n].resize(ds * wn);
    for (std::size_t s = 0; s < ds; ++s)
      for (std::size_t w = 0; w < wn; ++w) {
        // Psi_T(s (x) w' v): move s across w', then across v.
        SparseBuilder out;
        for (const auto& e : table_[n - 1][s * wp + w / dv]) {
          const std::size_t w1 = e.index / ds, s1 = e.index % ds;
          for (const auto& g : psi_.apply(s1, w % dv))
            out.add((w1 * dv + g.index / ds) * ds + g.index % ds, e.value * g.value);
        }
        table_[n][s * wn + w] = out.finish();
      }
  }
}

std::size_t TensorBraiding::words(int n) const { return ipow(psi_.dim_v(), n); }

Matrix TensorBraiding::matrix(int n) const {
  const std::size_t ds = psi_.S().dim(), wn = words(n);
  SparseMatrix m(psi_.field(), wn * ds, ds * wn);
  for (std::size_t c = 0; c < ds * wn; ++c) m.set_column(c, table_.at(n)[c]);
  return m.to_dense();
}

TensorBraiding extend_to_tensor(const Braiding& psi, int n_max) { return TensorBraiding(psi, n_max); }

}  // namespace pbwkit::entwine
