#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "pbwkit/algebra/bimodule.hpp"
#include "pbwkit/algebra/tensor.hpp"

namespace pbwkit::quadratic {

using algebra::Bimodule;
using algebra::FiniteAlgebra;
using algebra::TensorSpace;
using exactlin::FieldSpec;
using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::SparseBuilder;
using exactlin::SparseEchelon;
using exactlin::SparseMatrix;
using exactlin::SparseVec;
using exactlin::Subspace;
using exactlin::Vector;

/// Largest ambient dimension any single tensor space may reach before
/// CapExceeded is thrown. Default 5000.
std::size_t ambient_cap();
void set_ambient_cap(std::size_t cap);
/// Throws CapExceeded when ambient exceeds the cap.
void check_cap(std::size_t ambient, const char* what);

/// (S, M, R) with R a sub-bimodule of M (x)_S M, stored in the quotient
/// coordinates of TensorSpace(M, M).
class QuadraticPresentation {
 public:
  QuadraticPresentation() = default;

  /// relations are vectors in the quotient coordinates of M (x)_S M.
  /// Throws RNotSubbimodule with a witness (side, s, r) if R is not closed.
  static QuadraticPresentation make(Bimodule m, const std::vector<Vector>& relations);
  /// relations given in the plain ambient M (x)_k M (index a * dim M + b).
  static QuadraticPresentation from_ambient(Bimodule m, const std::vector<Vector>& relations);

  const FiniteAlgebra& S() const { return m_.algebra(); }
  const Bimodule& M() const noexcept { return m_; }
  FieldSpec field() const { return m_.field(); }
  const TensorSpace& T2() const noexcept { return *t2_; }
  const Subspace& R() const noexcept { return r_; }
  std::vector<SparseVec> relation_basis() const;

  /// R as a bimodule (restricted actions).
  Bimodule R_bimodule() const;

 private:
  Bimodule m_;
  std::shared_ptr<const TensorSpace> t2_;
  Subspace r_;
};

}  // namespace pbwkit::quadratic
