#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "pbwkit/exactlin/linalg.hpp"
#include "pbwkit/exactlin/sparse.hpp"

namespace pbwkit::algebra {

using exactlin::FieldSpec;
using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::SparseMatrix;
using exactlin::SparseVec;
using exactlin::Vector;

/// Finite-dimensional unital associative algebra given by structure
/// constants: product(i, j) is e_i * e_j in the basis.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;

  /// Validates associativity on all basis triples and the unit law.
  /// Throws NotAssociative(i,j,k) or BadUnit(i).
  static FiniteAlgebra make(FieldSpec field, std::size_t dim, std::vector<std::vector<Vector>> mult, Vector unit);
  /// The ground field as a one-dimensional algebra.
  static FiniteAlgebra ground(FieldSpec field);
  /// Group algebra from a multiplication table table[i][j] = index of g_i g_j;
  /// g_0 must be the identity.
  static FiniteAlgebra group_algebra(FieldSpec field, const std::vector<std::vector<std::size_t>>& table);
  static FiniteAlgebra cyclic_group_algebra(FieldSpec field, std::size_t order);

  bool valid() const noexcept { return static_cast<bool>(d_); }
  FieldSpec field() const { return d_->field; }
  std::size_t dim() const { return d_->dim; }
  const Vector& unit() const { return d_->unit; }
  const Vector& product(std::size_t i, std::size_t j) const { return d_->mult[i][j]; }
  const SparseVec& product_sparse(std::size_t i, std::size_t j) const { return d_->mult_sparse[i * d_->dim + j]; }
  Vector multiply(const Vector& a, const Vector& b) const;
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;

  /// x -> s x and x -> x s as matrices on S.
  Matrix left_mult(const Vector& s) const;
  Matrix right_mult(const Vector& s) const;
  const SparseMatrix& left_mult_basis(std::size_t i) const { return d_->left[i]; }
  const SparseMatrix& right_mult_basis(std::size_t i) const { return d_->right[i]; }

  /// Same space with reversed multiplication.
  FiniteAlgebra opposite() const;
  bool is_commutative() const;

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b);
  friend bool operator!=(const FiniteAlgebra& a, const FiniteAlgebra& b) { return !(a == b); }

 private:
  struct Data {
    FieldSpec field;
    std::size_t dim = 0;
    std::vector<std::vector<Vector>> mult;
    std::vector<SparseVec> mult_sparse;
    Vector unit;
    std::vector<SparseMatrix> left, right;
  };
  static FiniteAlgebra build(FieldSpec field, std::size_t dim, std::vector<std::vector<Vector>> mult, Vector unit);
  std::shared_ptr<const Data> d_;
};

/// Checks an algebra automorphism candidate: unital, multiplicative on all
/// basis pairs, invertible. Throws NotAutomorphism with the failing pair.
void require_automorphism(const FiniteAlgebra& s, const Matrix& sigma);

}  // namespace pbwkit::algebra
