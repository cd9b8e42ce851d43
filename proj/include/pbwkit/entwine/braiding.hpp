#pragma once

#include <optional>
#include <vector>

#include "pbwkit/algebra/bimodule.hpp"
#include "pbwkit/verdict.hpp"

namespace pbwkit::entwine {

using algebra::Bimodule;
using algebra::FiniteAlgebra;
using exactlin::FieldSpec;
using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::SparseBuilder;
using exactlin::SparseMatrix;
using exactlin::SparseVec;
using exactlin::Vector;

/// Psi: S (x) V -> V (x) S. Column s * dim V + v holds Psi(e_s (x) v_v) in
/// the coordinates v' * dim S + s' of V (x) S.
class Braiding {
 public:
  Braiding() = default;
  /// Shape-checked only; use check_braiding for the axioms.
  static Braiding make(FiniteAlgebra s, std::size_t dim_v, const Matrix& psi);
  /// tau(s (x) v) = v (x) s.
  static Braiding twist(FiniteAlgebra s, std::size_t dim_v);
  /// Psi(g (x) v) = g.v (x) g for a group algebra whose basis is the group.
  static Braiding group_action(FiniteAlgebra s, const std::vector<Matrix>& action);

  const FiniteAlgebra& S() const noexcept { return s_; }
  FieldSpec field() const { return s_.field(); }
  std::size_t dim_v() const noexcept { return dv_; }
  const SparseMatrix& matrix() const noexcept { return psi_; }
  const SparseVec& apply(std::size_t s, std::size_t v) const { return psi_.column(s * dv_ + v); }
  bool bijective() const noexcept { return bijective_; }

 private:
  FiniteAlgebra s_;
  std::size_t dv_ = 0;
  SparseMatrix psi_;
  bool bijective_ = false;
};

/// Both braiding diagrams on every basis instance, plus a bijectivity note.
VerdictReport check_braiding(const Braiding& psi);

/// V (x) S with s.(v (x) t) = Psi(s (x) v) t and the regular right action.
Bimodule bimodule_from_braiding(const Braiding& psi);

struct FreeRightBraiding {
  Braiding psi;
  Matrix phi;  // right-module isomorphism M -> V (x) S
};

/// Example-1 braiding Psi(s (x) v) = phi(s phi^{-1}(v (x) 1)). Without phi a
/// free right basis is searched for (seeded). Throws NotFreeRight.
FreeRightBraiding braiding_from_bimodule(const Bimodule& m, const std::optional<Matrix>& phi = std::nullopt);

/// Psi_T on S (x) V^{(x) n}, n <= n_max. Words of V^{(x) n} use the plain
/// left-nested index (w * dim V + v).
class TensorBraiding {
 public:
  TensorBraiding() = default;
  TensorBraiding(Braiding psi, int n_max);

  const Braiding& base() const noexcept { return psi_; }
  int max_degree() const noexcept { return static_cast<int>(table_.size()) - 1; }
  std::size_t words(int n) const;
  /// Psi_T(e_s (x) w) in coordinates w' * dim S + s'.
  const SparseVec& apply(int n, std::size_t s, std::size_t w) const { return table_.at(n)[s * words(n) + w]; }
  Matrix matrix(int n) const;

 private:
  Braiding psi_;
  std::vector<std::vector<SparseVec>> table_;
};

TensorBraiding extend_to_tensor(const Braiding& psi, int n_max);

/// Entwining axioms for (S, T(V), Psi_T) in all degrees <= n_max.
VerdictReport check_tensor_entwining(const TensorBraiding& t);

}  // namespace pbwkit::entwine
