#include <array>

#include "pbwkit/error.hpp"
#include "pbwkit/pbw/resolution.hpp"
#include "pbwkit/pbw/theorems.hpp"

namespace pbwkit::pbw {

namespace {

using TermPtr = std::shared_ptr<const FreeTerm>;

std::vector<SparseVec> transpose_rows(const SparseMatrix& m) {
  std::vector<SparseBuilder> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) rows[e.index].add(c, e.value);
  std::vector<SparseVec> out;
  for (auto& r : rows) out.push_back(r.finish());
  return out;
}

// Finds F: source -> target, right S-linear on generators, with post o F = rhs.
FreeMap solve_lift(const TermPtr& source, const TermPtr& target, const FreeMap& post, const std::vector<SparseVec>& rhs,
                   const std::string& what) {
  const FreeContext& ctx = source->context();
  const FieldSpec f = ctx.field();
  const Bimodule& nmod = ctx.factor(source->factor());
  const std::size_t dn = nmod.dim(), ds = ctx.S().dim();
  const int gd = source->generator_degree();
  const std::size_t dt = target->dim(gd);
  const auto prow = transpose_rows(post.matrix(gd));
  std::vector<std::vector<SparseVec>> rs(ds);  // rows of right multiplication by e_s
  for (std::size_t s = 0; s < ds; ++s) {
    SparseMatrix m(f, dt, dt);
    for (std::size_t c = 0; c < dt; ++c) m.set_column(c, target->right_multiply(gd, SparseVec::unit(c, f.one()), 0, s));
    rs[s] = transpose_rows(m);
  }
  FreeMap out{source, target, std::vector<SparseVec>(source->generators())};
  const std::size_t blocks = source->generators() / dn;
  // The coefficient rows are the same for every generator block st.
  std::vector<SparseVec> rows;
  std::vector<std::pair<std::size_t, std::size_t>> post_rows;  // (n, t) of each post equation
  for (std::size_t n = 0; n < dn; ++n)
    for (std::size_t t = 0; t < prow.size(); ++t) {
      if (prow[t].empty()) continue;
      rows.push_back(prow[t].shifted(n * dt));
      post_rows.emplace_back(n, t);
    }
  const std::size_t n_post = rows.size();
  for (std::size_t s = 0; s < ds; ++s)
    for (std::size_t n = 0; n < dn; ++n)
      for (std::size_t t = 0; t < dt; ++t) {
        // F(n e_s)[t] - (F(n) e_s)[t] = 0
        SparseBuilder eq;
        for (const auto& e : nmod.right(s).column(n)) eq.add(e.index * dt + t, e.value);
        for (const auto& e : rs[s][t]) eq.add(n * dt + e.index, -e.value);
        SparseVec v = eq.finish();
        if (!v.empty()) rows.push_back(std::move(v));
      }
  auto fail = [&](std::size_t st) {
    throw Error(ErrorCode::HomotopySolveFailed, what + ": no right S-linear solution on generator block " + std::to_string(st));
  };
  std::vector<std::vector<Scalar>> rhs_cols(blocks, std::vector<Scalar>(rows.size(), f.zero()));
  for (std::size_t st = 0; st < blocks; ++st) {
    std::vector<Vector> want(dn);
    for (std::size_t n = 0; n < dn; ++n) {
      want[n] = rhs[st * dn + n].to_dense(f, prow.size());
      for (std::size_t t = 0; t < prow.size(); ++t)
        if (prow[t].empty() && !want[n][t].is_zero()) fail(st);
    }
    for (std::size_t i = 0; i < n_post; ++i) rhs_cols[st][i] = want[post_rows[i].first][post_rows[i].second];
  }
  auto sol = exactlin::solve_sparse_many(f, dn * dt, rows, rhs_cols);
  if (!sol) {
    for (std::size_t st = 0; st < blocks; ++st)
      if (!exactlin::solve_sparse(f, dn * dt, rows, rhs_cols[st])) fail(st);
    fail(0);
  }
  for (std::size_t st = 0; st < blocks; ++st)
    for (std::size_t n = 0; n < dn; ++n) {
      SparseVec v;
      for (std::size_t t = 0; t < dt; ++t) v.push_back(t, (*sol)[st][n * dt + t]);
      out.images[st * dn + n] = std::move(v);
    }
  return out;
}

std::vector<SparseVec> difference(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b) {
  std::vector<SparseVec> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

// Places block (r0, c0) of size m into a column-assembled matrix.
void place(std::vector<SparseBuilder>& cols, const SparseMatrix& m, std::size_t r0, std::size_t c0, const Scalar& sign) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) cols[c0 + c].add(r0 + e.index, sign * e.value);
}

}  // namespace

PComplex build_p_complex_pdim2(const QuadraticPresentation& pres, int hom_depth, int deg_max) {
  std::string w;
  if (!pdim2_precondition(pres, &w)) throw Error(ErrorCode::Pdim2PreconditionFailed, w);
  if (hom_depth < 0) throw Error(ErrorCode::ValidationError, "hom_depth must be >= 0");
  SplittingMaps maps = splitting_maps(pres, deg_max);
  auto ctx = maps.ctx;
  const FieldSpec f = ctx->field();
  const Scalar one = f.one(), minus = f.from_int(-1);
  const int top = hom_depth + 1;

  std::vector<TermPtr> tr, tm, ts;
  for (int i = 0; i <= top; ++i) {
    tr.push_back(std::make_shared<const FreeTerm>(ctx, i, Factor::R));
    tm.push_back(std::make_shared<const FreeTerm>(ctx, i, Factor::M));
    ts.push_back(std::make_shared<const FreeTerm>(ctx, i, Factor::S));
  }
  auto bar = [](const std::vector<TermPtr>& t, int i) { return bar_differential(t[i], t[i - 1]); };

  PComplex out{maps, {maps.theta2}, {maps.theta1}, {maps.h0}, {}, {}};
  for (int i = 1; i <= top - 1; ++i) {
    FreeMap dm = bar(tm, i), dr = bar(tr, i);
    out.theta1.push_back(solve_lift(tm[i], ts[i], bar(ts, i), out.theta1[i - 1].compose_after(dm).images,
                                    "theta^{-1,-" + std::to_string(i) + "}"));
    if (i > top - 2) continue;
    out.theta2.push_back(solve_lift(tr[i], tm[i], dm, out.theta2[i - 1].compose_after(dr).images,
                                    "theta^{-2,-" + std::to_string(i) + "}"));
    auto rhs = difference(out.theta1[i].compose_after(out.theta2[i]).images, out.h[i - 1].compose_after(dr).images);
    out.h.push_back(solve_lift(tr[i], ts[i + 1], bar(ts, i + 1), rhs, "h^{-" + std::to_string(i) + "}"));
  }

  std::vector<FreeMap> dR(top + 1), dM(top + 1), dS(top + 1);
  for (int i = 1; i <= top; ++i) {
    dR[i] = bar(tr, i);
    dM[i] = bar(tm, i);
    dS[i] = bar(ts, i);
  }

  ChainComplex& cx = out.complex;
  cx.name = "P (pdim 2)";
  const GradedAlgebra& b = ctx->B();
  for (int deg = 0; deg <= deg_max; ++deg) {
    quadratic::Strand s;
    s.internal_degree = deg;
    auto dims = [&](int n) {
      std::array<std::size_t, 3> d{0, 0, 0};
      if (n >= 2) d[0] = tr[n - 2]->dim(deg);
      if (n >= 1) d[1] = tm[n - 1]->dim(deg);
      d[2] = ts[n]->dim(deg);
      return d;
    };
    s.terms.push_back({b.dim(deg), "B"});
    s.diffs.emplace_back();
    for (int n = 0; n <= top; ++n) {
      auto d = dims(n);
      s.terms.push_back({d[0] + d[1] + d[2], "P^-" + std::to_string(n)});
    }
    // P^0 -> B: x (x) [t (x) y] -> x t y
    {
      SparseMatrix mu(f, b.dim(deg), ts[0]->dim(deg));
      for (std::size_t c = 0; c < mu.cols(); ++c) {
        auto p = ts[0]->decode(deg, c);
        auto [t, y] = ctx->outer(Factor::S, deg - p.a).lift_pair(p.q);
        SparseVec xt = b.multiply(p.a, SparseVec::unit(p.x, one), 0, SparseVec::unit(t, one));
        mu.set_column(c, b.multiply(p.a, xt, deg - p.a, SparseVec::unit(y, one)));
      }
      s.diffs.push_back(std::move(mu));
    }
    for (int n = 1; n <= top; ++n) {
      auto src = dims(n), tgt = dims(n - 1);
      const std::size_t cols = src[0] + src[1] + src[2], rows = tgt[0] + tgt[1] + tgt[2];
      std::vector<SparseBuilder> c(cols);
      if (n >= 2) {
        const int i = n - 2;
        if (i >= 1) place(c, dR[i].matrix(deg), 0, 0, one);
        place(c, out.theta2[i].matrix(deg), tgt[0], 0, one);
        place(c, out.h[i].matrix(deg), tgt[0] + tgt[1], 0, minus);
      }
      if (n >= 1) {
        const int i = n - 1;
        if (i >= 1) place(c, dM[i].matrix(deg), tgt[0], src[0], minus);
        place(c, out.theta1[i].matrix(deg), tgt[0] + tgt[1], src[0], one);
      }
      place(c, dS[n].matrix(deg), tgt[0] + tgt[1], src[0] + src[1], one);
      SparseMatrix m(f, rows, cols);
      for (std::size_t j = 0; j < cols; ++j) m.set_column(j, c[j].finish());
      s.diffs.push_back(std::move(m));
    }
    s.certified = static_cast<std::size_t>(top + 1);
    cx.strands.push_back(std::move(s));
  }

  out.report.title = "pdim-2 resolution";
  out.report.merge(cx.certify(deg_max), "P: ");
  out.report.merge(verify_homotopy_identity(maps), "");
  return out;
}

}  // namespace pbwkit::pbw
