#pragma once

#include "pbwkit/algebra/tensor.hpp"
#include "pbwkit/pbw/deformation.hpp"
#include "pbwkit/verdict.hpp"

namespace pbwkit::pbw {

/// M (x)_S R cap R (x)_S M = 0 inside T_3.
bool pdim2_precondition(const QuadraticPresentation& pres, std::string* witness = nullptr);

/// Checks "precondition_pdim2", "theta_bimodule" and "predicted_pbw". The
/// prediction is undecided when the precondition fails. Requires phi = 0.
VerdictReport check_theorem_a(const DeformationData& d, int koszul_degree = 4);

/// R-bar (x)_S M cap M (x)_S R-bar inside T_3. Column j of via_rm / via_mr
/// holds the j-th basis vector in the coordinates of rm / mr.
struct OverlapSpace {
  algebra::TensorSpace rm, mr;
  std::vector<SparseVec> basis;  // T_3 coordinates
  std::vector<SparseVec> via_rm, via_mr;
  std::size_t dim() const { return basis.size(); }
};

OverlapSpace overlap_space(const QuadraticPresentation& pres);

/// Conditions (i)-(iii) on a basis of the overlap space plus "predicted_pbw".
/// Throws NotSmashShape without smash data and EquivarianceFailed when the
/// equivariance identities fail.
VerdictReport check_theorem_b(const DeformationData& d, int koszul_degree = 4);

}  // namespace pbwkit::pbw
