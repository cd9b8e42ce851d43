#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pbwkit/pbw/deformation.hpp"
#include "pbwkit/verdict.hpp"

namespace pbwkit::gorenstein {

using algebra::FiniteAlgebra;
using exactlin::FieldSpec;
using exactlin::Matrix;
using exactlin::Subspace;
using exactlin::Vector;
using pbw::DeformationData;
using quadratic::QuadraticPresentation;

/// D(S) projective as a left S-module.
bool check_selfinjective(const FiniteAlgebra& s);

/// dim Ext^i(S_B, B) in internal degree e for 0 <= i <= i_max and e in
/// [lo, hi]. A map K_i -> B_j has degree j - i.
struct ExtTable {
  int i_max = 0, lo = 0, hi = 0;
  std::vector<std::vector<std::size_t>> dims;  // dims[i][e - lo]

  std::size_t at(int i, int e) const { return dims.at(i).at(e - lo); }
};

ExtTable ext_via_koszul(const QuadraticPresentation& pres, int i_max, int lo, int hi);

/// Ext^d(S_B, B) in degree e as a left S-module, from Hom_S(K_d, B_{d+e}).
/// Only the left actions of the result carry meaning.
algebra::Bimodule ext_module(const QuadraticPresentation& pres, int d, int e);

struct GorensteinCertificate {
  int d = 0, l = 0, lo = 0, hi = 0;
  ExtTable ext, ext_left;  // ext_left: the opposite presentation
  bool selfinjective = false;
  VerdictReport report;

  bool passed() const { return report.overall() == Status::Pass; }
};

/// Ext^i = 0 for i != d and Ext^d = D(S)(l) on both sides, inside [lo, hi].
GorensteinCertificate check_gorenstein(const QuadraticPresentation& pres, int d, int l, int lo, int hi,
                                       std::uint64_t seed = 0, std::size_t trial_budget = 64);

/// (S^op, M^op, R^op): right modules over B become left modules.
QuadraticPresentation opposite_presentation(const QuadraticPresentation& pres);

struct SigmaData {
  Matrix sigma;          // s r0 = r0 sigma(s)
  Vector r0;             // relation-basis coordinates
  Subspace e_space;      // { e : s e = e sigma(s) }
  std::size_t trials = 0;
};

/// Seeded search for a free right generator r0 of R.
/// Throws DimMismatch, NoFreeGenerator, SigmaNotAutomorphism.
SigmaData extract_sigma(const QuadraticPresentation& pres, std::uint64_t seed = 0, std::size_t budget = 64);

/// theta(r0 s) = e s on relation-basis coordinates, for any e.
DeformationData theta_from_e(const QuadraticPresentation& pres, const SigmaData& sd, const Vector& e);

struct UeResult {
  DeformationData data;
  VerdictReport theorem_a;
  VerdictReport oracle;
};

/// U_e = T_S(M) / (r0 - e). Throws EOutsideSpace unless e is in e_space.
UeResult build_U_e(const QuadraticPresentation& pres, const SigmaData& sd, const Vector& e, int n_max = 4,
                   int n_sat = 6);

}  // namespace pbwkit::gorenstein
