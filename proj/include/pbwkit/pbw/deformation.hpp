#pragma once

#include <optional>
#include <vector>

#include "pbwkit/entwine/smash.hpp"
#include "pbwkit/quadratic/presentation.hpp"

namespace pbwkit::pbw {

using algebra::Bimodule;
using algebra::FiniteAlgebra;
using entwine::Braiding;
using exactlin::FieldSpec;
using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::SparseBuilder;
using exactlin::SparseMatrix;
using exactlin::SparseVec;
using exactlin::Vector;
using quadratic::QuadraticPresentation;

/// Classical data behind a smash presentation: R in V (x) V, phi: R -> V (x) S
/// and theta: R -> S in the coordinates of the given relation list.
struct SmashShape {
  Braiding psi;
  std::vector<Vector> relations;
  Matrix phi;    // (dim V * dim S) x |relations|
  Matrix theta;  // dim S x |relations|
};

/// U = T_S(M) / (r - phi(r) - theta(r) : r in R). phi and theta are stored on
/// the presentation's relation basis (the coordinates of R_bimodule()).
struct DeformationData {
  QuadraticPresentation pres;
  Matrix phi;    // dim M x dim R
  Matrix theta;  // dim S x dim R
  std::optional<SmashShape> smash;

  /// phi and theta on pres.relation_basis(). Shape-checked.
  static DeformationData make(QuadraticPresentation pres, Matrix phi, Matrix theta);
  /// phi and theta on an arbitrary basis of R (vectors in T_2 coordinates).
  /// Throws ValidationError if the vectors are not a basis of R.
  static DeformationData on_basis(QuadraticPresentation pres, const std::vector<SparseVec>& basis, const Matrix& phi,
                                  const Matrix& theta);
  /// theta only (Theorem A mode).
  static DeformationData theta_only(QuadraticPresentation pres, Matrix theta);

  bool homogeneous() const;
  std::size_t dim_R() const { return pres.R().dim(); }
};

/// phi_B(r (x) s) = phi(r) s and theta_B(r (x) s) = theta(r) s on the smash
/// presentation of (psi, relations). Equivariance is not checked here.
DeformationData smash_deformation(const Braiding& psi, const std::vector<Vector>& relations, const Matrix& phi,
                                  const Matrix& theta);

/// phi(r^Psi) s_Psi = s phi(r) and theta(r^Psi) s_Psi = s theta(r) on every
/// basis pair (s, r).
VerdictReport check_equivariance(const SmashShape& shape);

/// Left and right S-actions on R in relation-basis coordinates.
struct RelationActions {
  std::vector<Matrix> left, right;
};
RelationActions relation_actions(const QuadraticPresentation& pres);

}  // namespace pbwkit::pbw
