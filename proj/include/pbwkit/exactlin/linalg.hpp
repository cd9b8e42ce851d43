#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "pbwkit/exactlin/matrix.hpp"

namespace pbwkit::exactlin {

class Subspace;

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Prime fields go through the dispatched row
/// kernels; rationals use exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
/// Reference elimination on generic scalars (any field); rref() must agree.
RrefResult rref_generic(const Matrix& m);

std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);
/// Left kernel {a : a^T m = 0} as a subspace of k^{rows}.
Subspace left_kernel(const Matrix& m);
/// Some solution of m x = rhs (free variables set to zero), or nothing.
std::optional<Vector> solve_affine(const Matrix& m, const Vector& rhs);
/// Solves m X = rhs column by column with a single elimination; nothing if any
/// column is inconsistent.
std::optional<Matrix> solve_affine(const Matrix& m, const Matrix& rhs);
Vector random_vector(FieldSpec field, std::size_t n, std::mt19937_64& rng, int range = 9);
bool is_invertible(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// A subspace of k^n stored by its canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldSpec field, std::size_t ambient_dim);

  static Subspace span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& rows);
  static Subspace full(FieldSpec field, std::size_t ambient_dim);

  FieldSpec field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the RREF basis, or nothing if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// v minus its RREF reduction: zero exactly when v lies in the subspace.
  Vector reduce(const Vector& v) const;
  /// Non-pivot coordinates: their unit vectors span a direct complement.
  std::vector<std::size_t> complement() const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  FieldSpec field_{};
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Image of a subspace under a linear map.
Subspace image(const Matrix& m);
Subspace image(const Matrix& m, const Subspace& source);

}  // namespace pbwkit::exactlin
