#include "pbwkit/error.hpp"
#include "pbwkit/pbw/theorems.hpp"
#include "pbwkit/quadratic/koszul.hpp"

namespace pbwkit::pbw {

bool pdim2_precondition(const QuadraticPresentation& pres, std::string* witness) {
  auto k = quadratic::koszul_generators(pres, 3);
  if (k.dim(3) == 0) return true;
  if (witness) *witness = "dim (M (x)_S R cap R (x)_S M) = " + std::to_string(k.dim(3));
  return false;
}

VerdictReport check_theorem_a(const DeformationData& d, int koszul_degree) {
  if (!d.phi.is_zero()) throw Error(ErrorCode::ValidationError, "Theorem A mode requires phi = 0");
  const QuadraticPresentation& pres = d.pres;
  const FiniteAlgebra& s = pres.S();
  const FieldSpec f = pres.field();
  const std::size_t ds = s.dim(), nr = d.dim_R();
  VerdictReport rep;
  rep.title = "Theorem A";

  auto kz = quadratic::is_koszul(pres, koszul_degree);
  rep.add("koszul", kz.overall(), "certified up to degree " + std::to_string(koszul_degree));
  std::string w;
  const bool pdim2 = pdim2_precondition(pres, &w);
  rep.add("precondition_pdim2", pdim2, "M (x)_S R cap R (x)_S M = 0", w);

  auto act = relation_actions(pres);
  std::string wb;
  for (std::size_t si = 0; si < ds && wb.empty(); ++si) {
    const Vector es = exactlin::unit_vector(f, ds, si);
    for (std::size_t j = 0; j < nr && wb.empty(); ++j) {
      const Vector ej = exactlin::unit_vector(f, nr, j);
      Vector tl = d.theta.apply(act.left[si].apply(ej)), sl = s.multiply(es, d.theta.column(j));
      Vector tr = d.theta.apply(act.right[si].apply(ej)), sr = s.multiply(d.theta.column(j), es);
      const std::string at = "s=e" + std::to_string(si) + ", r=r" + std::to_string(j);
      if (tl != sl)
        wb = "left: " + at + ": theta(s r) = " + exactlin::to_string(tl) + " but s theta(r) = " + exactlin::to_string(sl);
      else if (tr != sr)
        wb = "right: " + at + ": theta(r s) = " + exactlin::to_string(tr) + " but theta(r) s = " + exactlin::to_string(sr);
    }
  }
  rep.add("theta_bimodule", wb.empty(), "theta commutes with both S-actions", wb);

  Status pred = Status::Undecided;
  std::string why;
  if (!pdim2 || kz.overall() != Status::Pass)
    why = "hypotheses not certified";
  else
    pred = wb.empty() ? Status::Pass : Status::Fail;
  rep.add("predicted_pbw", pred, why, pred == Status::Fail ? wb : "");
  return rep;
}

}  // namespace pbwkit::pbw
