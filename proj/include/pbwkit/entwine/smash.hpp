#pragma once

#include <memory>
#include <vector>

#include "pbwkit/entwine/braiding.hpp"
#include "pbwkit/quadratic/graded.hpp"

namespace pbwkit::entwine {

using quadratic::GradedAlgebra;
using quadratic::QuadraticPresentation;

/// Presentation of T(V)/(R) over the ground field; R in plain V (x) V.
QuadraticPresentation classical_presentation(FieldSpec f, std::size_t dim_v, const std::vector<Vector>& relations);

/// Psi_T(S (x) R) inside R (x) S; on failure witness names s and r.
bool check_relation_stability(const TensorBraiding& t, const std::vector<Vector>& relations,
                              std::string* witness = nullptr);

/// (S, A, Psi-bar) for A = T(V)/(R), induced from Psi_T on each degree.
class Entwining {
 public:
  Entwining() = default;
  /// Throws RelationsNotStable when Psi_T(S (x) R) leaves R (x) S.
  Entwining(Braiding psi, const QuadraticPresentation& a, int n_max);

  const Braiding& braiding() const noexcept { return t_->base(); }
  const TensorBraiding& tensor_braiding() const noexcept { return *t_; }
  const GradedAlgebra& A() const noexcept { return *a_; }
  const FiniteAlgebra& S() const { return t_->base().S(); }
  FieldSpec field() const { return S().field(); }
  int max_degree() const noexcept { return a_->max_degree(); }
  std::size_t dim_v() const { return t_->base().dim_v(); }
  /// Psi-bar(e_s (x) a_q) in coordinates q' * dim S + s' of A_n (x) S.
  const SparseVec& apply(int n, std::size_t s, std::size_t q) const { return table_.at(n)[s * a_->dim(n) + q]; }
  Matrix matrix(int n) const;

 private:
  std::shared_ptr<const TensorBraiding> t_;
  std::shared_ptr<const GradedAlgebra> a_;
  std::vector<std::vector<SparseVec>> table_;
};

Entwining induced_entwining(const Braiding& psi, const QuadraticPresentation& a, int n_max);
/// Braiding and entwining diagrams for (S, A, Psi-bar) on computed degrees.
VerdictReport check_entwining(const Entwining& e);

/// A # S with (A # S)_n = A_n (x) S (index q * dim S + s) and
/// (a (x) s)(b (x) t) = a b^Psi (x) s_Psi t.
class SmashProduct {
 public:
  SmashProduct() = default;
  explicit SmashProduct(Entwining e) : e_(std::move(e)) {}

  const Entwining& entwining() const noexcept { return e_; }
  const GradedAlgebra& A() const { return e_.A(); }
  const FiniteAlgebra& S() const { return e_.S(); }
  FieldSpec field() const { return e_.field(); }
  int max_degree() const { return e_.max_degree(); }
  std::size_t dim(int n) const { return A().dim(n) * S().dim(); }
  SparseVec unit() const;
  /// a (x) s for a in A_n, s in S.
  SparseVec pure(int n, const SparseVec& a, const SparseVec& s) const;
  SparseVec multiply(int i, const SparseVec& x, int j, const SparseVec& y) const;
  Matrix multiplication_matrix(int i, int j) const;

 private:
  Entwining e_;
};

SmashProduct smash_product(const Entwining& e);

/// Generators r (x) e_t of R (x) S as plain vectors of M (x)_k M with
/// M = V (x) S, relation-major.
std::vector<Vector> smash_relation_ambient(const Braiding& psi, const std::vector<Vector>& relations);

/// A # S as T_S(M)/(R (x) S) with M = V (x) S carrying the braided left action.
QuadraticPresentation smash_presentation(const Braiding& psi, const std::vector<Vector>& relations);

/// Phi: T_S(M) -> T(V) # S, degree by degree.
struct Lemma1Map {
  Braiding psi;
  Matrix phi;                // M -> V (x) S
  std::vector<Matrix> maps;  // maps[n]: T_n -> V^{(x) n} (x) S
  VerdictReport report;      // invertibility and multiplicativity
};

/// Throws NotFreeRight if M is not free as a right module.
Lemma1Map lemma1_isomorphism(const Bimodule& m, int n_max, const std::optional<Matrix>& phi = std::nullopt);

}  // namespace pbwkit::entwine
