#pragma once

#include <memory>
#include <vector>

#include "pbwkit/entwine/smash.hpp"
#include "pbwkit/quadratic/complex.hpp"
#include "pbwkit/quadratic/koszul.hpp"

namespace pbwkit::entwine {

using quadratic::ChainComplex;

/// Sign of the vertical bar differential on the cell (m, n) in the total
/// complex: ColumnParity uses (-1)^n, RowParity uses (-1)^m.
enum class TotalSign { ColumnParity, RowParity };

/// The double complex with cells C(m, n) = A#S (x) S^{(x) m} (x) K_n (x) A#S
/// in each internal degree, plus the column targets E(n) = A (x) K_n (x) A#S.
/// Coordinates of C(m, n) in degree D: blocks over a = deg of the left factor,
/// inside a block ((x * dim S^m + s_1..s_m) * dim K_n + k) * dim (A#S)_b + y.
class SmashResolution {
 public:
  SmashResolution(const Entwining& e, int deg_max);

  const SmashProduct& smash() const noexcept { return b_; }
  const quadratic::KoszulData& koszul() const noexcept { return k_; }
  int max_degree() const noexcept { return deg_max_; }

  std::size_t cell_dim(int degree, int m, int n) const;
  std::size_t column_dim(int degree, int n) const;

  /// d^{-m}_n: C(m, n) -> C(m-1, n) for m >= 1.
  SparseMatrix vertical(int degree, int m, int n) const;
  /// d^0_n: C(0, n) -> E(n).
  SparseMatrix augmentation(int degree, int n) const;
  /// theta^{-n}_m: C(m, n) -> C(m, n-1) for n >= 1.
  SparseMatrix horizontal(int degree, int m, int n) const;
  /// d^{-n} (x) 1 on E(n), n >= 1; multiplication E(0) -> A#S for n = 0.
  SparseMatrix column_differential(int degree, int n) const;
  /// Left action of e_s on E(n).
  SparseMatrix column_left_action(int degree, int n, std::size_t s) const;
  /// Multiplication C(0, 0) -> A#S.
  SparseMatrix multiplication(int degree) const;

  /// Total complex truncated at homological degree width; position 0 is A#S.
  ChainComplex total(int width, TotalSign sign = TotalSign::ColumnParity) const;

 private:
  struct Shape;
  Shape cell(int degree, int m, int n, bool words) const;
  Shape column(int degree, int n, bool words) const;
  SparseVec to_koszul(const Shape& words, const Shape& target, const SparseVec& v) const;

  Entwining e_;
  SmashProduct b_;
  quadratic::KoszulData k_;
  int deg_max_;
};

/// Lemma 2 identities as matrix equalities: theta d = d theta for m, n >= 1,
/// (d^{-n} (x) 1) d^0_n = d^0_n theta^{-n}_0, and theta theta = 0, on all
/// cells with m <= m_max in internal degrees <= deg_max.
VerdictReport check_lemma2(const SmashResolution& r, int m_max);
/// The column differentials commute with the left S-action (Lemma 3).
VerdictReport check_lemma3(const SmashResolution& r);

struct SmashKoszul {
  std::shared_ptr<SmashResolution> resolution;
  ChainComplex complex;
  VerdictReport report;
};

/// Builds the total complex for A#S. Throws NotClassicallyKoszul,
/// BraidingNotBijective or RelationsNotStable.
SmashKoszul smash_koszul_resolution(const Braiding& psi, const QuadraticPresentation& a, int width, int deg_max);

}  // namespace pbwkit::entwine
