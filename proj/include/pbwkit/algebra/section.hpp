#pragma once

#include <optional>
#include <string>

#include "pbwkit/algebra/bimodule.hpp"

namespace pbwkit::algebra {

/// A right-S-linear splitting rho: X -> X (x) S of the action map, written
/// x -> x^(0) (x) x^(1). Coordinates of X (x) S: index x * dim S + s.
struct Section {
  Bimodule module;
  SparseMatrix rho;  // (dim X * dim S) x dim X

  const SparseVec& of(std::size_t x) const { return rho.column(x); }
};

/// Solves mu o rho = id together with rho(x s) = rho(x) (1 (x) s). Uses only
/// the right action of X. Throws NotProjective when infeasible.
Section compute_section(const Bimodule& x);
std::optional<Section> try_compute_section(const Bimodule& x);
/// Right projectivity is splitting feasibility; left projectivity is right
/// projectivity over the opposite algebra.
bool is_projective(const Bimodule& x, Side side);

struct SectionIdentities {
  bool counit = false;       // x^(0) x^(1) = x
  bool right_linear = false; // (xs)^(0) (x) (xs)^(1) = x^(0) (x) x^(1) s
  bool coassoc = false;      // (x^(0))^(0) (x) (x^(0))^(1) x^(1) = x^(0) (x) x^(1)
  std::string witness;
  bool all() const { return counit && right_linear && coassoc; }
};

/// Checks the three section identities on every basis vector.
SectionIdentities check_section_identities(const Section& s);

}  // namespace pbwkit::algebra
