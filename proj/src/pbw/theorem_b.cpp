#include "pbwkit/error.hpp"
#include "pbwkit/exactlin/linalg.hpp"
#include "pbwkit/pbw/theorems.hpp"
#include "pbwkit/quadratic/koszul.hpp"
#include "pbwkit/quadratic/tensor_powers.hpp"

namespace pbwkit::pbw {

OverlapSpace overlap_space(const QuadraticPresentation& pres) {
  const FieldSpec f = pres.field();
  const Bimodule rb = pres.R_bimodule();
  const auto rel = pres.relation_basis();
  quadratic::TensorPowers t(pres.M(), 3);
  OverlapSpace out{algebra::TensorSpace(rb, pres.M()), algebra::TensorSpace(pres.M(), rb), {}, {}, {}};
  const std::size_t nu = out.rm.dim(), nv = out.mr.dim();
  std::vector<SparseBuilder> eq(t.dim(3));
  std::vector<SparseVec> au(nu);
  for (std::size_t q = 0; q < nu; ++q) {
    auto [r, m] = out.rm.lift_pair(q);
    au[q] = t.space(3).project(rel[r], SparseVec::unit(m, f.one()));
    for (const auto& e : au[q]) eq[e.index].add(q, e.value);
  }
  for (std::size_t q = 0; q < nv; ++q) {
    auto [m, r] = out.mr.lift_pair(q);
    for (const auto& e : t.multiply(1, SparseVec::unit(m, f.one()), 2, rel[r])) eq[e.index].add(nu + q, -e.value);
  }
  std::vector<SparseVec> rows;
  for (auto& b : eq) rows.push_back(b.finish());
  for (const auto& k : exactlin::sparse_kernel(f, nu + nv, rows)) {
    SparseBuilder u, v, w;
    for (const auto& e : k) {
      if (e.index < nu) {
        u.add(e.index, e.value);
        w.add(au[e.index], e.value);
      } else {
        v.add(e.index - nu, e.value);
      }
    }
    out.via_rm.push_back(u.finish());
    out.via_mr.push_back(v.finish());
    out.basis.push_back(w.finish());
  }
  return out;
}

VerdictReport check_theorem_b(const DeformationData& d, int koszul_degree) {
  if (!d.smash) throw Error(ErrorCode::NotSmashShape, "Theorem B needs R-bar = R (x) S from a braiding");
  const SmashShape& sh = *d.smash;
  auto eq = check_equivariance(sh);
  for (const auto& c : eq.checks)
    if (c.status != Status::Pass) throw Error(ErrorCode::EquivarianceFailed, c.name + ": " + c.witness);

  const QuadraticPresentation& pres = d.pres;
  const FieldSpec f = pres.field();
  const Bimodule& m = pres.M();
  VerdictReport rep;
  rep.title = "Theorem B";
  rep.merge(eq, "");

  auto a = entwine::classical_presentation(f, sh.psi.dim_v(), sh.relations);
  auto kz = quadratic::is_koszul(a, koszul_degree);
  rep.add("A koszul", kz.overall(), "classical, up to degree " + std::to_string(koszul_degree));
  rep.add("braiding bijective", sh.psi.bijective());

  OverlapSpace o = overlap_space(pres);
  auto phi_of = [&](std::size_t r) { return SparseVec::from_dense(d.phi.column(r)); };
  std::string w1, w2, w3;
  bool skipped = false;
  for (std::size_t k = 0; k < o.dim(); ++k) {
    SparseBuilder diff;
    Vector th(m.dim(), f.zero());
    for (const auto& e : o.via_rm[k]) {
      auto [r, x] = o.rm.lift_pair(e.index);
      diff.add(pres.T2().project(phi_of(r), SparseVec::unit(x, f.one())), e.value);
      th = exactlin::add(th, exactlin::scale(e.value, m.left_by(d.theta.column(r)).column(x).to_dense(f, m.dim())));
    }
    for (const auto& e : o.via_mr[k]) {
      auto [x, r] = o.mr.lift_pair(e.index);
      diff.add(pres.T2().project(SparseVec::unit(x, f.one()), phi_of(r)), -e.value);
      th = exactlin::sub(th, exactlin::scale(e.value, m.right_by(d.theta.column(r)).column(x).to_dense(f, m.dim())));
    }
    const Vector dv = diff.finish().to_dense(f, pres.T2().dim());
    auto c = pres.R().coordinates(dv);
    const std::string at = "overlap vector " + std::to_string(k);
    if (!c) {
      if (w1.empty()) w1 = at + ": (phi (x) id - id (x) phi)(w) = " + exactlin::to_string(dv) + " not in R";
      skipped = true;
      continue;
    }
    Vector lhs = exactlin::add(d.phi.apply(*c), th);
    if (!exactlin::is_zero(lhs) && w2.empty())
      w2 = at + ": phi(phi (x) id - id (x) phi)(w) + (theta (x) id - id (x) theta)(w) = " + exactlin::to_string(lhs);
    Vector t3 = d.theta.apply(*c);
    if (!exactlin::is_zero(t3) && w3.empty())
      w3 = at + ": theta(id (x) phi - phi (x) id)(w) = " + exactlin::to_string(exactlin::scale(-f.one(), t3));
  }
  const std::string od = "overlap dimension " + std::to_string(o.dim());
  rep.add("condition (i)", w1.empty(), od, w1);
  auto later = [&](const std::string& w) { return !w.empty() ? Status::Fail : skipped ? Status::Undecided : Status::Pass; };
  rep.add("condition (ii)", later(w2), skipped ? "evaluated where (i) holds" : "", w2);
  rep.add("condition (iii)", later(w3), skipped ? "evaluated where (i) holds" : "", w3);

  Status pred;
  std::string why;
  if (kz.overall() != Status::Pass || !sh.psi.bijective()) {
    pred = Status::Undecided;
    why = "hypotheses not certified";
  } else if (!w1.empty() || !w2.empty() || !w3.empty()) {
    pred = Status::Fail;
  } else {
    pred = skipped ? Status::Undecided : Status::Pass;
  }
  rep.add("predicted_pbw", pred, why, pred == Status::Fail ? (!w1.empty() ? w1 : !w2.empty() ? w2 : w3) : "");
  return rep;
}

}  // namespace pbwkit::pbw
