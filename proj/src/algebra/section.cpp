#include "pbwkit/algebra/section.hpp"

#include "pbwkit/error.hpp"

namespace pbwkit::algebra {

using exactlin::SparseBuilder;

namespace {

// x (x) s -> x s
SparseVec act(const Bimodule& x, const SparseVec& v) {
  const std::size_t ds = x.algebra().dim();
  SparseBuilder out;
  for (const auto& e : v) out.add(x.right(e.index % ds).column(e.index / ds), e.value);
  return out.finish();
}

// (x (x) s) -> x (x) s t
SparseVec times_right(const FiniteAlgebra& s, const SparseVec& v, std::size_t t) {
  const std::size_t ds = s.dim();
  SparseBuilder out;
  for (const auto& e : v)
    for (const auto& p : s.product_sparse(e.index % ds, t)) out.add((e.index / ds) * ds + p.index, e.value * p.value);
  return out.finish();
}

}  // namespace

std::optional<Section> try_compute_section(const Bimodule& x) {
  const FiniteAlgebra& s = x.algebra();
  const FieldSpec f = x.field();
  const std::size_t dx = x.dim(), ds = s.dim(), dxs = dx * ds;
  // Unknown rho[r][c] (row r of X (x) S, column c of X) at index r * dx + c.
  std::vector<SparseVec> rows;
  std::vector<Scalar> rhs;
  // mu o rho = id: sum_r mu(r, a) rho[r][c] = delta(a, c).
  std::vector<SparseBuilder> mu_rows(dx);
  for (std::size_t r = 0; r < dxs; ++r)
    for (const auto& e : x.right(r % ds).column(r / ds))
      mu_rows[e.index].add(r, e.value);
  std::vector<SparseVec> mu(dx);
  for (std::size_t a = 0; a < dx; ++a) mu[a] = mu_rows[a].finish();
  for (std::size_t a = 0; a < dx; ++a)
    for (std::size_t c = 0; c < dx; ++c) {
      SparseBuilder eq;
      for (const auto& e : mu[a]) eq.add(e.index * dx + c, e.value);
      rows.push_back(eq.finish());
      rhs.push_back(a == c ? f.one() : f.zero());
    }
  // rho(x e_t) = (1 (x) R(e_t)) rho(x), column by column:
  // sum_c right_t[c][b] rho[r][c] - sum_r' (1 (x) R_t)[r][r'] rho[r'][b] = 0.
  for (std::size_t t = 0; t < ds; ++t) {
    Matrix rt = x.right(t).to_dense();
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> lift_rows(dxs);
    for (std::size_t rp = 0; rp < dxs; ++rp) {
      SparseVec img = times_right(s, SparseVec::unit(rp, f.one()), t);
      for (const auto& e : img) lift_rows[e.index].push_back({rp, e.value});
    }
    for (std::size_t r = 0; r < dxs; ++r)
      for (std::size_t b = 0; b < dx; ++b) {
        SparseBuilder eq;
        for (std::size_t c = 0; c < dx; ++c)
          if (!rt(c, b).is_zero()) eq.add(r * dx + c, rt(c, b));
        for (const auto& [rp, v] : lift_rows[r]) eq.add(rp * dx + b, -v);
        SparseVec v = eq.finish();
        if (v.empty()) continue;
        rows.push_back(std::move(v));
        rhs.push_back(f.zero());
      }
  }
  auto sol = exactlin::solve_sparse(f, dxs * dx, rows, rhs);
  if (!sol) return std::nullopt;
  Section out{x, SparseMatrix(f, dxs, dx)};
  for (std::size_t c = 0; c < dx; ++c) {
    SparseVec col;
    for (std::size_t r = 0; r < dxs; ++r) col.push_back(r, (*sol)[r * dx + c]);
    out.rho.set_column(c, std::move(col));
  }
  return out;
}

Section compute_section(const Bimodule& x) {
  auto s = try_compute_section(x);
  if (!s) throw Error(ErrorCode::NotProjective, "no right-linear splitting of X (x) S -> X exists (dim X = " +
                                                     std::to_string(x.dim()) + ")");
  return std::move(*s);
}

bool is_projective(const Bimodule& x, Side side) {
  if (side == Side::Right) return try_compute_section(x).has_value();
  return try_compute_section(x.opposite()).has_value();
}

SectionIdentities check_section_identities(const Section& sec) {
  SectionIdentities out{true, true, true, {}};
  const Bimodule& x = sec.module;
  const FiniteAlgebra& s = x.algebra();
  const FieldSpec f = x.field();
  const std::size_t dx = x.dim(), ds = s.dim();
  for (std::size_t b = 0; b < dx; ++b) {
    const SparseVec& r = sec.of(b);
    if (act(x, r) != SparseVec::unit(b, f.one()) && out.counit) {
      out.counit = false;
      out.witness += "counit fails at basis vector " + std::to_string(b) + "; ";
    }
    for (std::size_t t = 0; t < ds && out.right_linear; ++t) {
      SparseBuilder lhs;
      for (const auto& e : x.right(t).column(b)) lhs.add(sec.of(e.index), e.value);
      if (lhs.finish() != times_right(s, r, t)) {
        out.right_linear = false;
        out.witness += "right linearity fails at x=" + std::to_string(b) + ", s=e" + std::to_string(t) + "; ";
      }
    }
    // sum over x^(0) (x) x^(1): rho(x^(0)) then multiply its S-part by x^(1).
    SparseBuilder lhs;
    for (const auto& e : r) {
      const std::size_t x0 = e.index / ds, x1 = e.index % ds;
      lhs.add(times_right(s, sec.of(x0), x1), e.value);
    }
    if (lhs.finish() != r && out.coassoc) {
      out.coassoc = false;
      out.witness += "coassociativity fails at basis vector " + std::to_string(b) + "; ";
    }
  }
  return out;
}

}  // namespace pbwkit::algebra
