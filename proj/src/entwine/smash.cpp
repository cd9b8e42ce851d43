#include "pbwkit/entwine/smash.hpp"

#include <functional>

#include "pbwkit/error.hpp"

namespace pbwkit::entwine {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// A graded algebra with A_0 = k together with Psi: S (x) A_n -> A_n (x) S.
struct GradedEntwining {
  std::function<std::size_t(int)> dim;
  std::function<const SparseVec&(int, std::size_t, std::size_t)> psi;
  std::function<SparseVec(int, std::size_t, int, std::size_t)> mult;
};

VerdictReport entwining_axioms(const FiniteAlgebra& s, const GradedEntwining& a, int n_max, std::string title) {
  VerdictReport r;
  r.title = std::move(title);
  const std::size_t ds = s.dim();
  const SparseVec unit = SparseVec::from_dense(s.unit());
  for (int n = 0; n <= n_max; ++n) {
    const std::string deg = std::to_string(n);
    std::string ws, wu;
    for (std::size_t q = 0; q < a.dim(n); ++q) {
      for (std::size_t x = 0; x < ds && ws.empty(); ++x)
        for (std::size_t y = 0; y < ds && ws.empty(); ++y) {
          SparseBuilder lhs, rhs;
          for (const auto& e : s.product_sparse(x, y)) lhs.add(a.psi(n, e.index, q), e.value);
          for (const auto& e : a.psi(n, y, q))
            for (const auto& g : a.psi(n, x, e.index / ds))
              for (const auto& p : s.product_sparse(g.index % ds, e.index % ds))
                rhs.add((g.index / ds) * ds + p.index, e.value * g.value * p.value);
          if (lhs.finish() != rhs.finish())
            ws = "s=e" + std::to_string(x) + ", t=e" + std::to_string(y) + ", a=" + std::to_string(q);
        }
      SparseBuilder lhs;
      for (const auto& e : unit) lhs.add(a.psi(n, e.index, q), e.value);
      if (lhs.finish() != unit.shifted(q * ds) && wu.empty()) wu = "a=" + std::to_string(q);
    }
    r.add("multiplicative in S, degree " + deg, ws.empty(), {}, ws);
    r.add("unital in S, degree " + deg, wu.empty(), {}, wu);
  }
  std::string wa;
  for (int i = 0; i <= n_max; ++i)
    for (int j = 0; i + j <= n_max; ++j)
      for (std::size_t x = 0; x < ds && wa.empty(); ++x)
        for (std::size_t p = 0; p < a.dim(i) && wa.empty(); ++p)
          for (std::size_t q = 0; q < a.dim(j) && wa.empty(); ++q) {
            SparseBuilder lhs, rhs;
            for (const auto& e : a.mult(i, p, j, q)) lhs.add(a.psi(i + j, x, e.index), e.value);
            for (const auto& e : a.psi(i, x, p))
              for (const auto& g : a.psi(j, e.index % ds, q))
                for (const auto& m : a.mult(i, e.index / ds, j, g.index / ds))
                  rhs.add(m.index * ds + g.index % ds, e.value * g.value * m.value);
            if (lhs.finish() != rhs.finish())
              wa = "s=e" + std::to_string(x) + ", a=" + std::to_string(p) + " (deg " + std::to_string(i) + "), b=" +
                   std::to_string(q) + " (deg " + std::to_string(j) + ")";
          }
  r.add("multiplicative in A", wa.empty(), "Psi(s (x) ab) = (mu (x) 1)(1 (x) Psi)(Psi (x) 1)(s (x) a (x) b)", wa);
  std::string w0;
  for (std::size_t x = 0; x < ds && w0.empty(); ++x)
    if (a.psi(0, x, 0) != SparseVec::unit(x, s.field().one())) w0 = "s=e" + std::to_string(x);
  r.add("unital in A", w0.empty(), "Psi(s (x) 1) = 1 (x) s", w0);
  return r;
}

}  // namespace

VerdictReport check_tensor_entwining(const TensorBraiding& t) {
  const FieldSpec f = t.base().field();
  const std::size_t dv = t.base().dim_v();
  GradedEntwining a;
  a.dim = [&](int n) { return t.words(n); };
  a.psi = [&](int n, std::size_t s, std::size_t w) -> const SparseVec& { return t.apply(n, s, w); };
  a.mult = [&, dv](int, std::size_t x, int j, std::size_t y) { return SparseVec::unit(x * ipow(dv, j) + y, f.one()); };
  return entwining_axioms(t.base().S(), a, t.max_degree(), "tensor entwining");
}

QuadraticPresentation classical_presentation(FieldSpec f, std::size_t dim_v, const std::vector<Vector>& relations) {
  auto k = FiniteAlgebra::ground(f);
  auto v = Bimodule::make(k, dim_v, {SparseMatrix::identity(f, dim_v)}, {SparseMatrix::identity(f, dim_v)});
  return QuadraticPresentation::from_ambient(v, relations);
}

bool check_relation_stability(const TensorBraiding& t, const std::vector<Vector>& relations, std::string* witness) {
  const FieldSpec f = t.base().field();
  const std::size_t ds = t.base().S().dim(), dv = t.base().dim_v(), w2 = dv * dv;
  exactlin::SparseEchelon rs(f, w2 * ds, true);
  for (const auto& r : relations) {
    SparseVec v = SparseVec::from_dense(r);
    for (std::size_t s = 0; s < ds; ++s) {
      SparseVec e;
      for (const auto& x : v) e.push_back(x.index * ds + s, x.value);
      rs.insert(e);
    }
  }
  for (std::size_t j = 0; j < relations.size(); ++j)
    for (std::size_t s = 0; s < ds; ++s) {
      SparseBuilder img;
      for (std::size_t w = 0; w < w2; ++w)
        if (!relations[j][w].is_zero()) img.add(t.apply(2, s, w), f.coerce(relations[j][w]));
      if (!rs.contains(img.finish())) {
        if (witness) *witness = "s=e" + std::to_string(s) + ", r=" + exactlin::to_string(relations[j]);
        return false;
      }
    }
  return true;
}

Entwining::Entwining(Braiding psi, const QuadraticPresentation& a, int n_max) {
  if (a.S().dim() != 1) throw Error(ErrorCode::ValidationError, "entwining: A must be given over the ground field");
  if (a.M().dim() != psi.dim_v()) throw Error(ErrorCode::DimensionMismatch, "entwining: dim V differs from A_1");
  t_ = std::make_shared<TensorBraiding>(psi, std::max(n_max, 2));
  std::vector<Vector> rel;
  for (std::size_t j = 0; j < a.R().dim(); ++j) rel.push_back(a.R().basis_vector(j));
  std::string w;
  if (!check_relation_stability(*t_, rel, &w)) throw Error(ErrorCode::RelationsNotStable, w);
  a_ = std::make_shared<GradedAlgebra>(a, n_max);
  const std::size_t ds = S().dim();
  table_.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const auto& piece = a_->piece(n);
    table_[n].resize(ds * piece.dim());
    for (std::size_t s = 0; s < ds; ++s)
      for (std::size_t q = 0; q < piece.dim(); ++q) {
        SparseBuilder out;
        for (const auto& e : t_->apply(n, s, piece.lift_index(q)))
          for (const auto& p : piece.project_index(e.index / ds)) out.add(p.index * ds + e.index % ds, e.value * p.value);
        table_[n][s * piece.dim() + q] = out.finish();
      }
  }
}

Matrix Entwining::matrix(int n) const {
  const std::size_t ds = S().dim(), da = a_->dim(n);
  SparseMatrix m(field(), da * ds, ds * da);
  for (std::size_t c = 0; c < ds * da; ++c) m.set_column(c, table_.at(n)[c]);
  return m.to_dense();
}

Entwining induced_entwining(const Braiding& psi, const QuadraticPresentation& a, int n_max) {
  return Entwining(psi, a, n_max);
}

VerdictReport check_entwining(const Entwining& e) {
  const FieldSpec f = e.field();
  GradedEntwining a;
  a.dim = [&](int n) { return e.A().dim(n); };
  a.psi = [&](int n, std::size_t s, std::size_t q) -> const SparseVec& { return e.apply(n, s, q); };
  a.mult = [&](int i, std::size_t x, int j, std::size_t y) {
    return e.A().multiply(i, SparseVec::unit(x, f.one()), j, SparseVec::unit(y, f.one()));
  };
  return entwining_axioms(e.S(), a, e.max_degree(), "entwining");
}

SparseVec SmashProduct::unit() const { return SparseVec::from_dense(S().unit()); }

SparseVec SmashProduct::pure(int, const SparseVec& a, const SparseVec& s) const {
  const std::size_t ds = S().dim();
  SparseBuilder out;
  for (const auto& x : a)
    for (const auto& y : s) out.add(x.index * ds + y.index, x.value * y.value);
  return out.finish();
}

SparseVec SmashProduct::multiply(int i, const SparseVec& x, int j, const SparseVec& y) const {
  const std::size_t ds = S().dim();
  const FieldSpec f = field();
  SparseBuilder out;
  for (const auto& ex : x)
    for (const auto& ey : y) {
      const std::size_t a = ex.index / ds, s = ex.index % ds, b = ey.index / ds, t = ey.index % ds;
      for (const auto& e : e_.apply(j, s, b)) {
        SparseVec ab = A().multiply(i, SparseVec::unit(a, f.one()), j, SparseVec::unit(e.index / ds, f.one()));
        const SparseVec& st = S().product_sparse(e.index % ds, t);
        for (const auto& p : ab)
          for (const auto& q : st) out.add(p.index * ds + q.index, ex.value * ey.value * e.value * p.value * q.value);
      }
    }
  return out.finish();
}

Matrix SmashProduct::multiplication_matrix(int i, int j) const {
  const FieldSpec f = field();
  const std::size_t di = dim(i), dj = dim(j);
  Matrix out(f, dim(i + j), di * dj);
  for (std::size_t a = 0; a < di; ++a)
    for (std::size_t b = 0; b < dj; ++b)
      for (const auto& e : multiply(i, SparseVec::unit(a, f.one()), j, SparseVec::unit(b, f.one())))
        out(e.index, a * dj + b) = e.value;
  return out;
}

SmashProduct smash_product(const Entwining& e) { return SmashProduct(e); }

std::vector<Vector> smash_relation_ambient(const Braiding& psi, const std::vector<Vector>& relations) {
  const FiniteAlgebra& s = psi.S();
  const FieldSpec f = psi.field();
  const std::size_t ds = s.dim(), dv = psi.dim_v(), dm = ds * dv;
  std::vector<Vector> rbar;
  for (const auto& r : relations) {
    if (r.size() != dv * dv) throw Error(ErrorCode::DimensionMismatch, "relations live in V (x) V");
    for (std::size_t t = 0; t < ds; ++t) {
      // r (x) e_t as (u (x) 1) (x)_S (v (x) e_t)
      Vector x(dm * dm, f.zero());
      for (std::size_t u = 0; u < dv; ++u)
        for (std::size_t v = 0; v < dv; ++v) {
          const Scalar c = f.coerce(r[u * dv + v]);
          if (c.is_zero()) continue;
          for (std::size_t g = 0; g < ds; ++g)
            if (!s.unit()[g].is_zero()) x[(u * ds + g) * dm + v * ds + t] += c * s.unit()[g];
        }
      rbar.push_back(std::move(x));
    }
  }
  return rbar;
}

QuadraticPresentation smash_presentation(const Braiding& psi, const std::vector<Vector>& relations) {
  return QuadraticPresentation::from_ambient(bimodule_from_braiding(psi), smash_relation_ambient(psi, relations));
}

Lemma1Map lemma1_isomorphism(const Bimodule& m, int n_max, const std::optional<Matrix>& phi) {
  FreeRightBraiding fr = braiding_from_bimodule(m, phi);
  const FieldSpec f = m.field();
  const std::size_t dv = fr.psi.dim_v();
  Lemma1Map out{fr.psi, fr.phi, {}, {}};
  out.report.title = "T_S(M) -> T(V) # S";
  SmashProduct tv(Entwining(fr.psi, classical_presentation(f, dv, {}), n_max));
  quadratic::TensorPowers t(m, n_max);
  std::vector<std::vector<SparseVec>> images(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    Matrix mat(f, tv.dim(n), t.dim(n));
    for (std::size_t q = 0; q < t.dim(n); ++q) {
      SparseVec img;
      if (n == 0) {
        img = SparseVec::unit(q, f.one());
      } else {
        const auto& w = t.word(n, q);
        img = SparseVec::from_dense(fr.phi.column(w[0]));
        for (std::size_t i = 1; i < w.size(); ++i)
          img = tv.multiply(static_cast<int>(i), img, 1, SparseVec::from_dense(fr.phi.column(w[i])));
      }
      for (const auto& e : img) mat(e.index, q) = e.value;
      images[n].push_back(std::move(img));
    }
    const bool iso = mat.rows() == mat.cols() && exactlin::rank(mat) == mat.rows();
    out.report.add("bijective in degree " + std::to_string(n), iso, {},
                   iso ? std::string() : "rank " + std::to_string(exactlin::rank(mat)));
    out.maps.push_back(std::move(mat));
  }
  auto apply = [&](int n, const SparseVec& x) {
    SparseBuilder b;
    for (const auto& e : x) b.add(images[n][e.index], e.value);
    return b.finish();
  };
  std::string w;
  for (int i = 0; i <= n_max; ++i)
    for (int j = 0; i + j <= n_max; ++j)
      for (std::size_t a = 0; a < t.dim(i) && w.empty(); ++a)
        for (std::size_t b = 0; b < t.dim(j) && w.empty(); ++b) {
          auto ea = SparseVec::unit(a, f.one()), eb = SparseVec::unit(b, f.one());
          if (apply(i + j, t.multiply(i, ea, j, eb)) != tv.multiply(i, images[i][a], j, images[j][b]))
            w = "u=" + std::to_string(a) + " (deg " + std::to_string(i) + "), v=" + std::to_string(b) + " (deg " +
                std::to_string(j) + ")";
        }
  out.report.add("multiplicative", w.empty(), "Phi(uv) = Phi(u) Phi(v) on all basis pairs", w);
  return out;
}

}  // namespace pbwkit::entwine
