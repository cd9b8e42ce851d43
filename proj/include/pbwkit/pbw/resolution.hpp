#pragma once

#include <map>
#include <memory>
#include <optional>

#include "pbwkit/algebra/section.hpp"
#include "pbwkit/algebra/tensor.hpp"
#include "pbwkit/quadratic/complex.hpp"
#include "pbwkit/quadratic/graded.hpp"
#include "pbwkit/pbw/deformation.hpp"

namespace pbwkit::pbw {

using algebra::Section;
using quadratic::ChainComplex;
using quadratic::GradedAlgebra;

enum class Factor { R, M, S };

/// Shared data for the free bimodules B (x) S^{(x) i} (x) N (x)_S B.
class FreeContext {
 public:
  FreeContext(const QuadraticPresentation& pres, int deg_max);

  const GradedAlgebra& B() const noexcept { return b_; }
  const FiniteAlgebra& S() const { return b_.presentation().S(); }
  FieldSpec field() const { return S().field(); }
  int max_degree() const noexcept { return deg_max_; }
  const Bimodule& factor(Factor n) const;
  int factor_degree(Factor n) const { return n == Factor::R ? 2 : n == Factor::M ? 1 : 0; }
  /// N (x)_S B_b.
  const algebra::TensorSpace& outer(Factor n, int b) const;
  const SparseVec& bmul(int i, std::size_t x, int j, std::size_t y) const;
  /// Unit of S = B_0.
  const SparseVec& one() const noexcept { return one_; }

 private:
  GradedAlgebra b_;
  int deg_max_;
  Bimodule r_, s_;
  std::map<std::pair<int, int>, algebra::TensorSpace> outer_;
  SparseVec one_;
  mutable std::map<std::tuple<int, std::size_t, int, std::size_t>, SparseVec> products_;
};

/// B (x) S^{(x) i} (x) N (x)_S B in internal degree d: blocks a = 0..d - deg N
/// with index ((x * dim S^i + st) * dim(N (x)_S B_b) + q), st base dim S with
/// s_1 most significant.
class FreeTerm {
 public:
  FreeTerm(std::shared_ptr<const FreeContext> ctx, int s_factors, Factor n);

  const FreeContext& context() const { return *ctx_; }
  int s_factors() const noexcept { return i_; }
  Factor factor() const noexcept { return n_; }
  int generator_degree() const { return ctx_->factor_degree(n_); }
  /// Generators S^{(x) i} (x) N, index st * dim N + n.
  std::size_t generators() const;
  std::size_t dim(int degree) const;
  std::size_t index(int degree, int a, std::size_t x, std::size_t st, std::size_t q) const;
  struct Pos {
    int a;
    std::size_t x, st, q;
  };
  Pos decode(int degree, std::size_t i) const;

  /// x (x) st (x) [n (x) y] with x in B_a, y in B_b given as vectors.
  void add_pure(SparseBuilder& out, int degree, int a, const SparseVec& x, std::size_t st, const SparseVec& n, int b,
                const SparseVec& y, const Scalar& c) const;
  /// The generator 1 (x) st (x) [n (x) 1] in degree deg N.
  SparseVec generator(std::size_t g) const;
  SparseVec left_multiply(int degree, const SparseVec& e, int a, std::size_t x) const;
  SparseVec right_multiply(int degree, const SparseVec& e, int b, std::size_t y) const;

 private:
  std::shared_ptr<const FreeContext> ctx_;
  int i_;
  Factor n_;
  std::size_t stm_;
};

/// A B-bimodule map between free terms, fixed by its values on generators
/// (elements of the target in degree deg N). Generator values must be right
/// S-linear in N.
struct FreeMap {
  std::shared_ptr<const FreeTerm> source, target;
  std::vector<SparseVec> images;

  SparseVec apply(int degree, const SparseVec& e) const;
  SparseMatrix matrix(int degree) const;
  FreeMap compose_after(const FreeMap& first) const;  // this o first
};

FreeMap bar_differential(std::shared_ptr<const FreeTerm> source, std::shared_ptr<const FreeTerm> target);

struct SplittingMaps {
  std::shared_ptr<const FreeContext> ctx;
  Section rho_m, rho_b2;
  Matrix zeta;   // (dim M)^2 x dim T_2: [x (x) y] -> x^(0) (x) x^(1) y
  Matrix xi;     // dim R x dim T_2, right S-linear, xi iota = id
  Matrix iota;   // dim T_2 x dim R
  Matrix alpha;  // (dim M)^2 dim S x dim R
  FreeMap theta2, theta1, h0;  // theta^{-2,0}, theta^{-1,0}, h^0
};

/// Throws SplittingMissing if a required section does not exist. Sections
/// may be supplied; they are checked for the section identities.
SplittingMaps splitting_maps(const QuadraticPresentation& pres, int deg_max, const std::optional<Section>& rho_m = {},
                             const std::optional<Section>& rho_b2 = {});

/// d^{-1} h^0 = theta^{-1,0} theta^{-2,0} as matrices in every internal degree
/// <= deg_max, plus xi iota = id and the section identities.
VerdictReport verify_homotopy_identity(const SplittingMaps& maps);
bool homotopy_identity_holds(const SplittingMaps& maps);

struct PComplex {
  SplittingMaps maps;
  std::vector<FreeMap> theta2, theta1, h;  // index i: theta^{-2,-i}, theta^{-1,-i}, h^{-i}
  ChainComplex complex;
  VerdictReport report;
};

/// P^{-n} = B S^{n-2} R B + B S^{n-1} M B + B S^n B for n <= hom_depth + 1.
/// Exactness is certified at P^0 .. P^{-hom_depth} and at B.
/// Throws Pdim2PreconditionFailed and HomotopySolveFailed.
PComplex build_p_complex_pdim2(const QuadraticPresentation& pres, int hom_depth, int deg_max);

}  // namespace pbwkit::pbw
