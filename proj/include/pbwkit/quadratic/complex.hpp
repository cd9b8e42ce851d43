#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbwkit/exactlin/sparse.hpp"
#include "pbwkit/verdict.hpp"

namespace pbwkit::quadratic {

struct ChainTerm {
  std::size_t dim = 0;
  std::string tag;
};

/// One internal degree of a complex. Position 0 is the augmentation target;
/// diffs[p] maps terms[p] to terms[p-1] (diffs[0] is unused). Every term
/// outside the listed positions is zero unless the strand is truncated:
/// then positions >= certified lack their incoming map and are not judged.
struct Strand {
  int internal_degree = 0;
  std::vector<ChainTerm> terms;
  std::vector<exactlin::SparseMatrix> diffs;
  std::size_t certified = static_cast<std::size_t>(-1);
};

class ChainComplex {
 public:
  std::string name;
  std::vector<Strand> strands;

  const Strand& strand(int degree) const;
  /// First position p with diffs[p-1] * diffs[p] != 0.
  std::optional<std::size_t> d_squared_failure(int degree) const;
  /// Homology dimension at every position.
  std::vector<std::size_t> homology(int degree) const;
  /// Exactness at every certified position.
  bool exact(int degree) const;
  long long euler_characteristic(int degree) const;

  /// d o d = 0 and exactness for every strand up to max_degree.
  VerdictReport certify(int max_degree) const;
};

}  // namespace pbwkit::quadratic
