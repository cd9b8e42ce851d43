#include "pbwkit/algebra/finite_algebra.hpp"

#include "pbwkit/error.hpp"

namespace pbwkit::algebra {

using exactlin::SparseBuilder;

FiniteAlgebra FiniteAlgebra::build(FieldSpec field, std::size_t dim, std::vector<std::vector<Vector>> mult,
                                   Vector unit) {
  auto d = std::make_shared<Data>();
  d->field = field;
  d->dim = dim;
  if (mult.size() != dim) throw Error(ErrorCode::DimensionMismatch, "structure constants: expected " + std::to_string(dim) + " rows");
  for (std::size_t i = 0; i < dim; ++i) {
    if (mult[i].size() != dim) throw Error(ErrorCode::DimensionMismatch, "structure constants row " + std::to_string(i));
    for (std::size_t j = 0; j < dim; ++j) {
      if (mult[i][j].size() != dim)
        throw Error(ErrorCode::DimensionMismatch, "product e" + std::to_string(i) + "*e" + std::to_string(j) + " has wrong length");
      for (auto& x : mult[i][j]) x = field.coerce(x);
    }
  }
  if (unit.size() != dim) throw Error(ErrorCode::DimensionMismatch, "unit has wrong length");
  for (auto& x : unit) x = field.coerce(x);
  d->mult = std::move(mult);
  d->unit = std::move(unit);
  d->mult_sparse.reserve(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) d->mult_sparse.push_back(SparseVec::from_dense(d->mult[i][j]));
  d->left.assign(dim, SparseMatrix(field, dim, dim));
  d->right.assign(dim, SparseMatrix(field, dim, dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      d->left[i].set_column(j, d->mult_sparse[i * dim + j]);
      d->right[i].set_column(j, d->mult_sparse[j * dim + i]);
    }
  FiniteAlgebra a;
  a.d_ = std::move(d);
  return a;
}

FiniteAlgebra FiniteAlgebra::make(FieldSpec field, std::size_t dim, std::vector<std::vector<Vector>> mult, Vector unit) {
  FiniteAlgebra a = build(field, dim, std::move(mult), std::move(unit));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        SparseVec ij_k = a.multiply(a.product_sparse(i, j), SparseVec::unit(k, field.one()));
        SparseVec i_jk = a.multiply(SparseVec::unit(i, field.one()), a.product_sparse(j, k));
        if (ij_k != i_jk)
          throw Error(ErrorCode::NotAssociative,
                      "(e" + std::to_string(i) + "e" + std::to_string(j) + ")e" + std::to_string(k) +
                          " != e" + std::to_string(i) + "(e" + std::to_string(j) + "e" + std::to_string(k) + ")");
      }
  SparseVec u = SparseVec::from_dense(a.unit());
  for (std::size_t i = 0; i < dim; ++i) {
    SparseVec ei = SparseVec::unit(i, field.one());
    if (a.multiply(u, ei) != ei || a.multiply(ei, u) != ei)
      throw Error(ErrorCode::BadUnit, "unit fails on e" + std::to_string(i));
  }
  return a;
}

FiniteAlgebra FiniteAlgebra::ground(FieldSpec field) {
  return make(field, 1, {{Vector{field.one()}}}, Vector{field.one()});
}

FiniteAlgebra FiniteAlgebra::group_algebra(FieldSpec field, const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  std::vector<std::vector<Vector>> mult(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "group table row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) mult[i][j] = exactlin::unit_vector(field, n, table[i][j]);
  }
  return make(field, n, std::move(mult), exactlin::unit_vector(field, n, 0));
}

FiniteAlgebra FiniteAlgebra::cyclic_group_algebra(FieldSpec field, std::size_t order) {
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) table[i][j] = (i + j) % order;
  return group_algebra(field, table);
}

Vector FiniteAlgebra::multiply(const Vector& a, const Vector& b) const {
  return multiply(SparseVec::from_dense(a), SparseVec::from_dense(b)).to_dense(field(), dim());
}

SparseVec FiniteAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  SparseBuilder out;
  for (const auto& x : a)
    for (const auto& y : b) out.add(product_sparse(x.index, y.index), x.value * y.value);
  return out.finish();
}

Matrix FiniteAlgebra::left_mult(const Vector& s) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(s, exactlin::unit_vector(field(), dim(), j)));
  return m;
}

Matrix FiniteAlgebra::right_mult(const Vector& s) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(exactlin::unit_vector(field(), dim(), j), s));
  return m;
}

FiniteAlgebra FiniteAlgebra::opposite() const {
  std::vector<std::vector<Vector>> mult(dim(), std::vector<Vector>(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) mult[i][j] = product(j, i);
  return build(field(), dim(), std::move(mult), unit());
}

bool FiniteAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return a.field() == b.field() && a.dim() == b.dim() && a.d_->mult == b.d_->mult && a.unit() == b.unit();
}

void require_automorphism(const FiniteAlgebra& s, const Matrix& sigma) {
  if (sigma.rows() != s.dim() || sigma.cols() != s.dim())
    throw Error(ErrorCode::NotAutomorphism, "sigma has wrong shape");
  if (sigma.apply(s.unit()) != s.unit()) throw Error(ErrorCode::NotAutomorphism, "sigma(1) != 1");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      Vector lhs = sigma.apply(s.product(i, j));
      Vector rhs = s.multiply(sigma.column(i), sigma.column(j));
      if (lhs != rhs)
        throw Error(ErrorCode::NotAutomorphism,
                    "sigma(e" + std::to_string(i) + "e" + std::to_string(j) + ") != sigma(e" + std::to_string(i) +
                        ")sigma(e" + std::to_string(j) + ")");
    }
  if (!exactlin::is_invertible(sigma)) throw Error(ErrorCode::NotAutomorphism, "sigma is singular");
}

}  // namespace pbwkit::algebra
