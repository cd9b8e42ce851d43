#pragma once

#include <memory>
#include <vector>

#include "pbwkit/quadratic/tensor_powers.hpp"

namespace pbwkit::quadratic {

/// B_n = T_n / I_n for n <= n_max, with I_n = I_{n-1} M + T_{n-2} R.
/// Basis vectors of B_n are classes of T_n basis vectors (normal words).
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(QuadraticPresentation pres, int n_max);

  const QuadraticPresentation& presentation() const noexcept { return pres_; }
  const TensorPowers& tensor() const noexcept { return *t_; }
  int max_degree() const noexcept { return n_max_; }
  std::size_t dim(int n) const { return pieces_.at(n).dim(); }
  const SparseEchelon& ideal(int n) const { return pieces_.at(n).relations(); }
  const exactlin::Quotient& piece(int n) const { return pieces_.at(n); }
  const Bimodule& bimodule(int n) const { return bimodules_.at(n); }

  SparseVec project(int n, const SparseVec& t) const { return pieces_.at(n).project(t); }
  SparseVec lift(int n, const SparseVec& b) const { return pieces_.at(n).lift(b); }
  /// Product B_i x B_j -> B_{i+j}; requires i + j <= n_max.
  SparseVec multiply(int i, const SparseVec& x, int j, const SparseVec& y) const;
  /// Dense matrix of the product of basis vectors: column a * dim B_j + b.
  Matrix multiplication_matrix(int i, int j) const;

 private:
  QuadraticPresentation pres_;
  std::shared_ptr<const TensorPowers> t_;
  int n_max_ = 0;
  std::vector<exactlin::Quotient> pieces_;
  std::vector<Bimodule> bimodules_;
};

GradedAlgebra graded_pieces(const QuadraticPresentation& pres, int n_max);

}  // namespace pbwkit::quadratic
