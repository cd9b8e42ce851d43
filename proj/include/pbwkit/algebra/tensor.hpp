#pragma once

#include <memory>
#include <utility>

#include "pbwkit/algebra/bimodule.hpp"

namespace pbwkit::algebra {

/// M (x)_S N realized as the quotient of M (x) N by span{ms (x) n - m (x) sn}.
/// Ambient index of e_m (x) e_n is m * dim N + n. Quotient coordinates are the
/// non-pivot ambient columns of the fully reduced relation echelon, so each
/// quotient basis vector is the class of a pure tensor e_m (x) e_n.
class TensorSpace {
 public:
  TensorSpace() = default;
  /// Throws AlgebraMismatch if M and N live over different algebras.
  TensorSpace(Bimodule m, Bimodule n);

  const Bimodule& left_factor() const noexcept { return m_; }
  const Bimodule& right_factor() const noexcept { return n_; }
  std::size_t ambient_dim() const noexcept { return m_.dim() * n_.dim(); }
  std::size_t dim() const noexcept { return quotient_->dim(); }
  const exactlin::Quotient& quotient() const noexcept { return *quotient_; }

  /// Class of e_m (x) e_n.
  const SparseVec& project_pair(std::size_t m, std::size_t n) const {
    return quotient_->project_index(m * n_.dim() + n);
  }
  /// Class of x (x) y.
  SparseVec project(const SparseVec& x, const SparseVec& y) const;
  SparseVec project_ambient(const SparseVec& v) const { return quotient_->project(v); }
  /// Pure tensor representing quotient basis vector q.
  std::pair<std::size_t, std::size_t> lift_pair(std::size_t q) const {
    std::size_t a = quotient_->lift_index(q);
    return {a / n_.dim(), a % n_.dim()};
  }

  /// Dense projection (quotient x ambient) and section (ambient x quotient).
  Matrix projection() const;
  Matrix section() const;
  exactlin::Subspace relations() const;

  /// Induced outer actions on the quotient.
  const Bimodule& as_bimodule() const { return *bimodule_; }

 private:
  Bimodule m_, n_;
  std::shared_ptr<const exactlin::Quotient> quotient_;
  std::shared_ptr<const Bimodule> bimodule_;
};

TensorSpace tensor_over_S(const Bimodule& m, const Bimodule& n);

}  // namespace pbwkit::algebra
