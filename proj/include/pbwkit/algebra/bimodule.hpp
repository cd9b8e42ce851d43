#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pbwkit/algebra/finite_algebra.hpp"

namespace pbwkit::algebra {

enum class Side { Left, Right };

/// Finite-dimensional S-bimodule: left(i) is x -> e_i x and right(i) is
/// x -> x e_i, both as sparse column matrices on the module.
class Bimodule {
 public:
  Bimodule() = default;

  /// Validates the representation laws, commutation and unitality.
  /// Throws NotBimodule with the failing instance.
  static Bimodule make(FiniteAlgebra s, std::size_t dim, std::vector<SparseMatrix> left,
                       std::vector<SparseMatrix> right);
  /// Skips validation; for modules whose laws hold by construction (induced
  /// actions on tensor quotients). Tests validate them separately.
  static Bimodule trusted(FiniteAlgebra s, std::size_t dim, std::vector<SparseMatrix> left,
                          std::vector<SparseMatrix> right);
  static Bimodule regular(const FiniteAlgebra& s);
  /// Zero module.
  static Bimodule zero(const FiniteAlgebra& s);

  const FiniteAlgebra& algebra() const noexcept { return s_; }
  FieldSpec field() const { return s_.field(); }
  std::size_t dim() const noexcept { return dim_; }
  const SparseMatrix& left(std::size_t i) const { return left_[i]; }
  const SparseMatrix& right(std::size_t i) const { return right_[i]; }
  const std::vector<SparseMatrix>& left_actions() const noexcept { return left_; }
  const std::vector<SparseMatrix>& right_actions() const noexcept { return right_; }

  /// Action of an arbitrary element of S.
  SparseMatrix left_by(const Vector& s) const;
  SparseMatrix right_by(const Vector& s) const;

  /// First violated axiom, if any.
  std::optional<std::string> violation() const;

  /// The same space viewed as an S^op-bimodule (sides exchanged).
  Bimodule opposite() const;
  /// Submodule spanned by the given basis (rows): restricted actions.
  /// Throws NotBimodule if the span is not closed under the actions.
  Bimodule restrict_to(const exactlin::Subspace& sub) const;

 private:
  FiniteAlgebra s_;
  std::size_t dim_ = 0;
  std::vector<SparseMatrix> left_, right_;
};

/// A linear map between bimodules (target.dim x source.dim).
struct BimoduleMap {
  Bimodule source;
  Bimodule target;
  Matrix matrix;
};

bool is_linear(const BimoduleMap& f, Side side);
bool is_bimodule_map(const BimoduleMap& f);
/// A basis element s and the two sides of the failing identity, if any.
std::optional<std::string> bimodule_map_witness(const BimoduleMap& f);

/// Basis of the space of maps M -> N that are linear on the given sides.
std::vector<Matrix> hom_space(const Bimodule& m, const Bimodule& n, bool left_linear, bool right_linear);
inline std::vector<Matrix> hom_right_S(const Bimodule& m, const Bimodule& n) { return hom_space(m, n, false, true); }
inline std::vector<Matrix> hom_left_S(const Bimodule& m, const Bimodule& n) { return hom_space(m, n, true, false); }
inline std::vector<Matrix> hom_bimodule(const Bimodule& m, const Bimodule& n) { return hom_space(m, n, true, true); }

/// D(S) = Hom(S, k) with (s f)(t) = f(t s) and (f s)(t) = f(s t).
Bimodule dual_bimodule(const FiniteAlgebra& s);
/// S with left action s.x = sigma(s) x and the regular right action.
/// Throws NotAutomorphism if sigma is not an algebra automorphism.
Bimodule twist_left(const FiniteAlgebra& s, const Matrix& sigma);

enum class IsoStatus { Found, NotIsomorphic, Undecided };

struct IsoSearch {
  IsoStatus status = IsoStatus::Undecided;
  std::optional<Matrix> iso;
  std::size_t hom_dim = 0;
  std::size_t trials = 0;
};

/// Searches the linear family of maps M -> N (linear on the requested sides)
/// for an invertible member with seeded random combinations. A miss within
/// the budget is Undecided, never a disproof.
IsoSearch find_isomorphism(const Bimodule& m, const Bimodule& n, bool left_linear, bool right_linear,
                           std::mt19937_64& rng, std::size_t trial_budget);

}  // namespace pbwkit::algebra
