#pragma once

#include <vector>

#include "pbwkit/quadratic/complex.hpp"
#include "pbwkit/quadratic/graded.hpp"

namespace pbwkit::quadratic {

/// K_0 = S, K_1 = M, K_n = intersection of T_i R T_{n-2-i} inside T_n.
struct KoszulData {
  std::vector<Subspace> K;
  std::vector<std::vector<SparseVec>> basis;  // same spaces, sparse rows

  std::size_t dim(int n) const { return K.at(n).dim(); }
};

/// Span of x r y over basis words x of T_i, y of T_{n-2-i} and r in R.
SparseEchelon relation_piece(const TensorPowers& t, const QuadraticPresentation& pres, int n, int i);

/// Iterated intersection in the left-nested coordinates of T_n.
KoszulData koszul_generators(const QuadraticPresentation& pres, int n_max);
KoszulData koszul_generators(const TensorPowers& t, const QuadraticPresentation& pres, int n_max);
/// K_{n+1} = (K_n M) cap (T_{n-1} R), an independent route.
KoszulData koszul_generators_recursive(const TensorPowers& t, const QuadraticPresentation& pres, int n_max);

/// Strands of K_n (x)_S B -> ... -> B -> S -> 0 for internal degree <= deg_max.
/// Term n sits at position n + 1 and is realized as the image of
/// K_n (x)_S B_{D-n} in T_n (x)_S B_{D-n}.
ChainComplex koszul_resolution(const GradedAlgebra& b, const KoszulData& k, int deg_max);
ChainComplex koszul_resolution(const QuadraticPresentation& pres, int deg_max);

/// Strands of B (x)_S K_n (x)_S B -> ... -> B (x)_S B -> B -> 0.
ChainComplex bimodule_complex(const GradedAlgebra& b, const KoszulData& k, int deg_max);
ChainComplex bimodule_complex(const QuadraticPresentation& pres, int deg_max);

/// Truncated certificate: B_i projective on both sides for 1 <= i <= deg_max
/// and exactness of the Koszul complex in internal degrees <= deg_max.
VerdictReport is_koszul(const QuadraticPresentation& pres, int deg_max = 6);

}  // namespace pbwkit::quadratic
