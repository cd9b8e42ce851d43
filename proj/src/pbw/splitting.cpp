#include "pbwkit/error.hpp"
#include "pbwkit/pbw/resolution.hpp"

namespace pbwkit::pbw {

namespace {

Section checked_section(const Bimodule& x, const std::optional<Section>& given, const std::string& name) {
  if (given) {
    auto ids = algebra::check_section_identities(*given);
    if (!ids.all()) throw Error(ErrorCode::SplittingMissing, "supplied section for " + name + " is invalid: " + ids.witness);
    return *given;
  }
  auto s = algebra::try_compute_section(x);
  if (!s) throw Error(ErrorCode::SplittingMissing, "no right S-linear splitting of " + name + " (x) S -> " + name);
  return std::move(*s);
}

// Right S-linear xi: M (x)_S M -> R with xi iota = id.
Matrix solve_xi(const QuadraticPresentation& pres, const Matrix& iota) {
  const FieldSpec f = pres.field();
  const std::size_t dt = pres.T2().dim(), dr = pres.R().dim(), ds = pres.S().dim();
  const Bimodule& t2 = pres.T2().as_bimodule();
  auto act = relation_actions(pres);
  std::vector<SparseVec> rows;
  std::vector<Scalar> rhs;
  for (std::size_t r = 0; r < dr; ++r)
    for (std::size_t c = 0; c < dr; ++c) {
      SparseBuilder eq;
      for (std::size_t t = 0; t < dt; ++t) eq.add(r * dt + t, iota(t, c));
      rows.push_back(eq.finish());
      rhs.push_back(r == c ? f.one() : f.zero());
    }
  for (std::size_t s = 0; s < ds; ++s) {
    const SparseMatrix& tr = t2.right(s);
    for (std::size_t t = 0; t < dt; ++t)
      for (std::size_t r = 0; r < dr; ++r) {
        // (xi T_s)[r][t] - (A_s xi)[r][t] = 0
        SparseBuilder eq;
        for (const auto& e : tr.column(t)) eq.add(r * dt + e.index, e.value);
        for (std::size_t rp = 0; rp < dr; ++rp) eq.add(rp * dt + t, -act.right[s](r, rp));
        SparseVec v = eq.finish();
        if (v.empty()) continue;
        rows.push_back(std::move(v));
        rhs.push_back(f.zero());
      }
  }
  auto sol = exactlin::solve_sparse(f, dr * dt, rows, rhs);
  if (!sol) throw Error(ErrorCode::SplittingMissing, "no right S-linear retraction xi of R -> M (x)_S M");
  Matrix xi(f, dr, dt);
  for (std::size_t r = 0; r < dr; ++r)
    for (std::size_t t = 0; t < dt; ++t) xi(r, t) = (*sol)[r * dt + t];
  return xi;
}

}  // namespace

SplittingMaps splitting_maps(const QuadraticPresentation& pres, int deg_max, const std::optional<Section>& rho_m,
                             const std::optional<Section>& rho_b2) {
  if (deg_max < 2) throw Error(ErrorCode::ValidationError, "splitting maps need deg_max >= 2");
  auto ctx = std::make_shared<const FreeContext>(pres, deg_max);
  const FieldSpec f = pres.field();
  const Bimodule& m = pres.M();
  const std::size_t dm = m.dim(), ds = pres.S().dim(), dt = pres.T2().dim(), dr = pres.R().dim();
  const Scalar one = f.one();

  Section sm = checked_section(m, rho_m, "M");
  Section sb = checked_section(ctx->B().bimodule(2), rho_b2, "B_2");
  const auto rel = pres.relation_basis();

  Matrix iota(f, dt, dr);
  for (std::size_t r = 0; r < dr; ++r)
    for (const auto& e : rel[r]) iota(e.index, r) = e.value;
  Matrix xi = solve_xi(pres, iota);

  // zeta[x (x) y] = x^(0) (x) x^(1) y, index m1 * dim M + m2
  Matrix zeta(f, dm * dm, dt);
  for (std::size_t q = 0; q < dt; ++q) {
    auto [x, y] = pres.T2().lift_pair(q);
    for (const auto& e : sm.of(x))
      for (const auto& w : m.left(e.index % ds).column(y)) zeta((e.index / ds) * dm + w.index, q) += e.value * w.value;
  }
  Matrix zi = zeta * iota;
  Matrix alpha(f, dm * dm * ds, dr);
  for (std::size_t r = 0; r < dr; ++r)
    for (std::size_t k = 0; k < dm * dm; ++k) {
      if (zi(k, r).is_zero()) continue;
      for (const auto& e : sm.of(k % dm)) alpha(((k / dm) * dm + e.index / ds) * ds + e.index % ds, r) += zi(k, r) * e.value;
    }

  auto r0 = std::make_shared<const FreeTerm>(ctx, 0, Factor::R);
  auto m0 = std::make_shared<const FreeTerm>(ctx, 0, Factor::M);
  auto s0 = std::make_shared<const FreeTerm>(ctx, 0, Factor::S);
  auto s1 = std::make_shared<const FreeTerm>(ctx, 1, Factor::S);

  FreeMap theta2{r0, m0, {}};
  for (std::size_t r = 0; r < dr; ++r) {
    SparseBuilder img;
    for (const auto& t : rel[r]) {
      auto [x, y] = pres.T2().lift_pair(t.index);
      for (const auto& e : sm.of(x))
        m0->add_pure(img, 2, 1, SparseVec::unit(e.index / ds, one), 0, m.left(e.index % ds).column(y), 0, ctx->one(),
                     t.value * e.value);
      m0->add_pure(img, 2, 0, ctx->one(), 0, SparseVec::unit(x, one), 1, SparseVec::unit(y, one), t.value);
    }
    theta2.images.push_back(img.finish());
  }

  FreeMap theta1{m0, s0, {}};
  for (std::size_t x = 0; x < dm; ++x) {
    SparseBuilder img;
    for (const auto& e : sm.of(x))
      s0->add_pure(img, 1, 1, SparseVec::unit(e.index / ds, one), 0, SparseVec::unit(e.index % ds, one), 0, ctx->one(),
                   e.value);
    s0->add_pure(img, 1, 0, ctx->one(), 0, ctx->one(), 1, SparseVec::unit(x, one), -one);
    theta1.images.push_back(img.finish());
  }

  FreeMap h0{r0, s1, {}};
  for (std::size_t r = 0; r < dr; ++r) {
    SparseBuilder img;
    for (std::size_t k = 0; k < dm * dm * ds; ++k) {
      const Scalar& c = alpha(k, r);
      if (c.is_zero()) continue;
      const std::size_t m1 = k / ds / dm, m2 = (k / ds) % dm, s = k % ds;
      const SparseVec es = SparseVec::unit(s, one);
      // -(m1 m2^(0)) (x) m2^(1) (x) s
      for (const auto& e : sm.of(m2))
        s1->add_pure(img, 2, 2, ctx->bmul(1, m1, 1, e.index / ds), e.index % ds, es, 0, ctx->one(), -c * e.value);
      // +(m1 m2)^(0) (x) (m1 m2)^(1) (x) s
      for (const auto& p : ctx->bmul(1, m1, 1, m2))
        for (const auto& e : sb.of(p.index))
          s1->add_pure(img, 2, 2, SparseVec::unit(e.index / ds, one), e.index % ds, es, 0, ctx->one(), c * p.value * e.value);
    }
    // -(x^(0))^(0) (x) (x^(0))^(1) (x) x^(1) y
    for (std::size_t k = 0; k < dm * dm; ++k) {
      const Scalar& c = zi(k, r);
      if (c.is_zero()) continue;
      for (const auto& e : sm.of(k / dm))
        s1->add_pure(img, 2, 1, SparseVec::unit(e.index / ds, one), e.index % ds, ctx->one(), 1,
                     SparseVec::unit(k % dm, one), -c * e.value);
    }
    h0.images.push_back(img.finish());
  }

  return SplittingMaps{ctx, std::move(sm), std::move(sb), std::move(zeta), std::move(xi), std::move(iota),
                       std::move(alpha), std::move(theta2), std::move(theta1), std::move(h0)};
}

VerdictReport verify_homotopy_identity(const SplittingMaps& maps) {
  VerdictReport rep;
  rep.title = "homotopy identity";
  const FieldSpec f = maps.ctx->field();
  const std::size_t dr = maps.iota.cols();
  rep.add("xi iota = id", maps.xi * maps.iota == Matrix::identity(f, dr));
  auto im = algebra::check_section_identities(maps.rho_m);
  rep.add("section identities M", im.all(), "", im.witness);
  auto ib = algebra::check_section_identities(maps.rho_b2);
  rep.add("section identities B_2", ib.all(), "", ib.witness);

  auto s0 = std::make_shared<const FreeTerm>(maps.ctx, 0, Factor::S);
  FreeMap d = bar_differential(maps.h0.target, s0);
  FreeMap lhs = d.compose_after(maps.h0);
  FreeMap rhs = maps.theta1.compose_after(maps.theta2);
  for (int deg = 2; deg <= maps.ctx->max_degree(); ++deg) {
    SparseMatrix a = lhs.matrix(deg), b = rhs.matrix(deg);
    std::string w;
    if (!(a == b)) {
      for (std::size_t c = 0; c < a.cols() && w.empty(); ++c)
        if (a.column(c) != b.column(c)) w = "column " + std::to_string(c);
    }
    rep.add("d h0 = theta1 theta2 in degree " + std::to_string(deg), w.empty(),
            std::to_string(a.rows()) + " x " + std::to_string(a.cols()), w);
  }
  return rep;
}

bool homotopy_identity_holds(const SplittingMaps& maps) { return verify_homotopy_identity(maps).overall() == Status::Pass; }

}  // namespace pbwkit::pbw
