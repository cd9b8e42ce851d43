#pragma once

#include "pbwkit/pbw/deformation.hpp"
#include "pbwkit/verdict.hpp"

namespace pbwkit::pbw {

/// dim F_k U for k <= n_max from the truncated ideal W(n') of generator
/// sandwiches x g y (x in T_i, y in T_j, i + j + 2 <= n').
struct FilteredDims {
  int n_max = 0;
  int n_sat = 0;
  std::vector<std::size_t> dims;        // dim F_k U at n' = n_sat
  std::vector<std::size_t> graded;      // dim F_k U / F_{k-1} U
  std::vector<std::size_t> expected;    // dim B_k
  std::vector<bool> stabilized;         // n_sat and n_sat + 1 agree at k
  /// snapshots[j][k] = dim F_k U computed from W(j + 2), j + 2 <= n_sat + 1.
  std::vector<std::vector<std::size_t>> snapshots;
  bool short_circuit = false;           // phi = theta = 0

  bool all_stabilized() const;
};

FilteredDims oracle_filtered_dims(const DeformationData& d, int n_max, int n_sat);

/// PBW up to n_max: graded pieces equal dim B_k with every flag stabilized.
/// Also asserts the gr U bound and saturation monotonicity.
VerdictReport is_pbw_up_to(const DeformationData& d, int n_max, int n_sat);
VerdictReport oracle_report(const FilteredDims& fd);

}  // namespace pbwkit::pbw
