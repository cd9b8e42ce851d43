#include "pbwkit/algebra/bimodule.hpp"

#include "pbwkit/error.hpp"

namespace pbwkit::algebra {

using exactlin::SparseBuilder;
using exactlin::Subspace;

namespace {

std::string idx(const char* name, std::size_t i) { return std::string(name) + std::to_string(i); }

SparseMatrix combine(const std::vector<SparseMatrix>& actions, const Vector& s, FieldSpec f, std::size_t dim) {
  SparseMatrix out(f, dim, dim);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!s[i].is_zero()) out = out + actions[i].scaled(s[i]);
  return out;
}

// Equations X A_m(s) - A_n(s) X = 0 in the unknowns X[a][c] (index a*dm + c).
void add_commutation_equations(const SparseMatrix& am, const SparseMatrix& an, std::size_t dm, std::size_t dn,
                               std::vector<SparseVec>& rows) {
  Matrix an_dense = an.to_dense();
  for (std::size_t a = 0; a < dn; ++a)
    for (std::size_t b = 0; b < dm; ++b) {
      SparseBuilder eq;
      for (const auto& e : am.column(b)) eq.add(a * dm + e.index, e.value);
      for (std::size_t c = 0; c < dn; ++c)
        if (!an_dense(a, c).is_zero()) eq.add(c * dm + b, -an_dense(a, c));
      SparseVec v = eq.finish();
      if (!v.empty()) rows.push_back(std::move(v));
    }
}

}  // namespace

Bimodule Bimodule::trusted(FiniteAlgebra s, std::size_t dim, std::vector<SparseMatrix> left,
                           std::vector<SparseMatrix> right) {
  if (left.size() != s.dim() || right.size() != s.dim())
    throw Error(ErrorCode::DimensionMismatch, "need one action matrix per basis element of S");
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (left[i].rows() != dim || left[i].cols() != dim || right[i].rows() != dim || right[i].cols() != dim)
      throw Error(ErrorCode::DimensionMismatch, "action matrix " + std::to_string(i) + " is not " +
                                                    std::to_string(dim) + "x" + std::to_string(dim));
  Bimodule m;
  m.s_ = std::move(s);
  m.dim_ = dim;
  m.left_ = std::move(left);
  m.right_ = std::move(right);
  return m;
}

Bimodule Bimodule::make(FiniteAlgebra s, std::size_t dim, std::vector<SparseMatrix> left,
                        std::vector<SparseMatrix> right) {
  Bimodule m = trusted(std::move(s), dim, std::move(left), std::move(right));
  if (auto v = m.violation()) throw Error(ErrorCode::NotBimodule, *v);
  return m;
}

Bimodule Bimodule::regular(const FiniteAlgebra& s) {
  std::vector<SparseMatrix> left, right;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    left.push_back(s.left_mult_basis(i));
    right.push_back(s.right_mult_basis(i));
  }
  return trusted(s, s.dim(), std::move(left), std::move(right));
}

Bimodule Bimodule::zero(const FiniteAlgebra& s) {
  std::vector<SparseMatrix> acts(s.dim(), SparseMatrix(s.field(), 0, 0));
  return trusted(s, 0, acts, acts);
}

SparseMatrix Bimodule::left_by(const Vector& s) const { return combine(left_, s, field(), dim_); }
SparseMatrix Bimodule::right_by(const Vector& s) const { return combine(right_, s, field(), dim_); }

std::optional<std::string> Bimodule::violation() const {
  const std::size_t n = s_.dim();
  const SparseMatrix id = SparseMatrix::identity(field(), dim_);
  if (!(left_by(s_.unit()) == id)) return "unit does not act as identity on the left";
  if (!(right_by(s_.unit()) == id)) return "unit does not act as identity on the right";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& ij = s_.product(i, j);
      if (!(left_[i].compose(left_[j]) == left_by(ij)))
        return "left action not multiplicative at " + idx("e", i) + "," + idx("e", j);
      if (!(right_[j].compose(right_[i]) == right_by(ij)))
        return "right action not multiplicative at " + idx("e", i) + "," + idx("e", j);
      if (!(left_[i].compose(right_[j]) == right_[j].compose(left_[i])))
        return "left " + idx("e", i) + " and right " + idx("e", j) + " do not commute";
    }
  return std::nullopt;
}

Bimodule Bimodule::opposite() const { return trusted(s_.opposite(), dim_, right_, left_); }

Bimodule Bimodule::restrict_to(const Subspace& sub) const {
  if (sub.ambient_dim() != dim_) throw Error(ErrorCode::AmbientMismatch, "restrict_to: ambient mismatch");
  const FieldSpec f = field();
  const std::size_t k = sub.dim();
  auto restrict = [&](const std::vector<SparseMatrix>& acts, const char* side) {
    std::vector<SparseMatrix> out;
    for (std::size_t i = 0; i < acts.size(); ++i) {
      SparseMatrix r(f, k, k);
      for (std::size_t b = 0; b < k; ++b) {
        Vector img = acts[i].apply(sub.basis_vector(b));
        auto coords = sub.coordinates(img);
        if (!coords)
          throw Error(ErrorCode::NotBimodule,
                      std::string("subspace not closed under ") + side + " action of " + idx("e", i));
        r.set_column(b, SparseVec::from_dense(*coords));
      }
      out.push_back(std::move(r));
    }
    return out;
  };
  return trusted(s_, k, restrict(left_, "left"), restrict(right_, "right"));
}

bool is_linear(const BimoduleMap& f, Side side) {
  const auto& src = f.source;
  const auto& tgt = f.target;
  SparseMatrix m = SparseMatrix::from_dense(f.matrix);
  for (std::size_t i = 0; i < src.algebra().dim(); ++i) {
    const auto& a = side == Side::Left ? src.left(i) : src.right(i);
    const auto& b = side == Side::Left ? tgt.left(i) : tgt.right(i);
    if (!(m.compose(a) == b.compose(m))) return false;
  }
  return true;
}

bool is_bimodule_map(const BimoduleMap& f) { return is_linear(f, Side::Left) && is_linear(f, Side::Right); }

std::optional<std::string> bimodule_map_witness(const BimoduleMap& f) {
  SparseMatrix m = SparseMatrix::from_dense(f.matrix);
  for (std::size_t i = 0; i < f.source.algebra().dim(); ++i) {
    for (Side side : {Side::Left, Side::Right}) {
      const auto& a = side == Side::Left ? f.source.left(i) : f.source.right(i);
      const auto& b = side == Side::Left ? f.target.left(i) : f.target.right(i);
      SparseMatrix lhs = m.compose(a), rhs = b.compose(m);
      for (std::size_t x = 0; x < f.source.dim(); ++x)
        if (lhs.column(x) != rhs.column(x)) {
          const char* s = side == Side::Left ? "left" : "right";
          return std::string(s) + " action of e" + std::to_string(i) + " on basis vector " + std::to_string(x) +
                 ": f(s.x) = " + exactlin::to_string(lhs.column(x).to_dense(f.target.field(), f.target.dim())) +
                 ", s.f(x) = " + exactlin::to_string(rhs.column(x).to_dense(f.target.field(), f.target.dim()));
        }
    }
  }
  return std::nullopt;
}

std::vector<Matrix> hom_space(const Bimodule& m, const Bimodule& n, bool left_linear, bool right_linear) {
  if (m.algebra() != n.algebra()) throw Error(ErrorCode::AlgebraMismatch, "hom_space over different algebras");
  const std::size_t dm = m.dim(), dn = n.dim();
  const FieldSpec f = m.field();
  std::vector<SparseVec> rows;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    if (left_linear) add_commutation_equations(m.left(i), n.left(i), dm, dn, rows);
    if (right_linear) add_commutation_equations(m.right(i), n.right(i), dm, dn, rows);
  }
  std::vector<Matrix> out;
  for (const auto& v : exactlin::sparse_kernel(f, dm * dn, rows)) {
    Matrix x(f, dn, dm);
    for (const auto& e : v) x(e.index / dm, e.index % dm) = f.coerce(e.value);
    out.push_back(std::move(x));
  }
  return out;
}

Bimodule dual_bimodule(const FiniteAlgebra& s) {
  std::vector<SparseMatrix> left, right;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    left.push_back(SparseMatrix::from_dense(s.right_mult_basis(i).to_dense().transposed()));
    right.push_back(SparseMatrix::from_dense(s.left_mult_basis(i).to_dense().transposed()));
  }
  return Bimodule::trusted(s, s.dim(), std::move(left), std::move(right));
}

Bimodule twist_left(const FiniteAlgebra& s, const Matrix& sigma) {
  require_automorphism(s, sigma);
  std::vector<SparseMatrix> left, right;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    left.push_back(SparseMatrix::from_dense(s.left_mult(sigma.column(i))));
    right.push_back(s.right_mult_basis(i));
  }
  return Bimodule::trusted(s, s.dim(), std::move(left), std::move(right));
}

IsoSearch find_isomorphism(const Bimodule& m, const Bimodule& n, bool left_linear, bool right_linear,
                           std::mt19937_64& rng, std::size_t trial_budget) {
  IsoSearch out;
  if (m.dim() != n.dim()) {
    out.status = IsoStatus::NotIsomorphic;
    return out;
  }
  if (m.dim() == 0) {
    out.status = IsoStatus::Found;
    out.iso = Matrix(m.field(), 0, 0);
    return out;
  }
  auto basis = hom_space(m, n, left_linear, right_linear);
  out.hom_dim = basis.size();
  if (basis.empty()) {
    out.status = IsoStatus::NotIsomorphic;
    return out;
  }
  const FieldSpec f = m.field();
  for (std::size_t t = 0; t < trial_budget; ++t) {
    ++out.trials;
    Matrix cand(f, n.dim(), m.dim());
    if (t < basis.size()) {
      cand = basis[t];
    } else {
      for (const auto& b : basis) cand = cand + b.scaled(f.random(rng, 5));
    }
    if (exactlin::is_invertible(cand)) {
      out.status = IsoStatus::Found;
      out.iso = std::move(cand);
      return out;
    }
  }
  out.status = IsoStatus::Undecided;
  return out;
}

}  // namespace pbwkit::algebra
