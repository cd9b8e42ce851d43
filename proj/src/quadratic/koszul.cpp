#include "pbwkit/quadratic/koszul.hpp"

#include <functional>
#include <map>
#include <optional>

#include "pbwkit/algebra/section.hpp"
#include "pbwkit/error.hpp"

namespace pbwkit::quadratic {

namespace {

std::vector<SparseVec> echelon_rows(const SparseEchelon& e) {
  std::vector<SparseVec> out;
  for (const auto& [pivot, row] : e.rows()) out.push_back(row);
  return out;
}

Subspace to_subspace(FieldSpec f, std::size_t ambient, const std::vector<SparseVec>& rows) {
  std::vector<Vector> dense;
  for (const auto& r : rows) dense.push_back(r.to_dense(f, ambient));
  return Subspace::span(f, ambient, dense);
}

std::vector<SparseVec> units(FieldSpec f, std::size_t n) {
  std::vector<SparseVec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(SparseVec::unit(i, f.one()));
  return out;
}

// One position of a strand: a term spanned by generators inside an ambient
// space, with the differential given on ambient basis vectors.
struct Position {
  std::string tag;
  std::size_t ambient = 0;
  bool whole = false;
  std::vector<SparseVec> generators;
  std::function<SparseVec(std::size_t)> d;
};

Strand assemble(FieldSpec f, int degree, const std::vector<Position>& pos) {
  Strand s;
  s.internal_degree = degree;
  std::vector<std::vector<SparseVec>> basis(pos.size());
  std::vector<std::map<std::size_t, std::size_t>> coord(pos.size());
  std::vector<std::optional<SparseEchelon>> span(pos.size());
  for (std::size_t p = 0; p < pos.size(); ++p) {
    if (pos[p].whole) {
      basis[p] = units(f, pos[p].ambient);
      for (std::size_t i = 0; i < pos[p].ambient; ++i) coord[p][i] = i;
    } else {
      SparseEchelon e(f, pos[p].ambient, true);
      for (const auto& g : pos[p].generators) e.insert(g);
      for (const auto& [pivot, row] : e.rows()) {
        coord[p][pivot] = basis[p].size();
        basis[p].push_back(row);
      }
      span[p] = std::move(e);
    }
    s.terms.push_back({basis[p].size(), pos[p].tag});
  }
  s.diffs.resize(pos.size());
  for (std::size_t p = 1; p < pos.size(); ++p) {
    SparseMatrix m(f, basis[p - 1].size(), basis[p].size());
    std::vector<std::optional<SparseVec>> memo(pos[p].ambient);
    for (std::size_t c = 0; c < basis[p].size(); ++c) {
      SparseBuilder img;
      for (const auto& e : basis[p][c]) {
        if (!memo[e.index]) memo[e.index] = pos[p].d(e.index);
        img.add(*memo[e.index], e.value);
      }
      SparseVec w = img.finish();
      if (span[p - 1] && !span[p - 1]->contains(w))
        throw Error(ErrorCode::ValidationError, "differential leaves the subcomplex at " + pos[p].tag);
      SparseVec col;
      for (const auto& e : w) {
        auto it = coord[p - 1].find(e.index);
        if (it != coord[p - 1].end()) col.push_back(it->second, e.value);
      }
      // Pivot columns increase with coordinate order, so col is sorted.
      m.set_column(c, std::move(col));
    }
    s.diffs[p] = std::move(m);
  }
  return s;
}

SparseVec unit_vec(FieldSpec f, std::size_t i) { return SparseVec::unit(i, f.one()); }

}  // namespace

SparseEchelon relation_piece(const TensorPowers& t, const QuadraticPresentation& pres, int n, int i) {
  const FieldSpec f = pres.field();
  const int j = n - 2 - i;
  SparseEchelon out(f, t.dim(n), true);
  std::vector<SparseVec> xs = i == 0 ? std::vector<SparseVec>{t.unit()} : units(f, t.dim(i));
  std::vector<SparseVec> ys = j == 0 ? std::vector<SparseVec>{t.unit()} : units(f, t.dim(j));
  for (const auto& r : pres.relation_basis())
    for (const auto& x : xs) {
      SparseVec xr = t.multiply(i, x, 2, r);
      for (const auto& y : ys) out.insert(t.multiply(i + 2, xr, j, y));
    }
  return out;
}

KoszulData koszul_generators(const TensorPowers& t, const QuadraticPresentation& pres, int n_max) {
  const FieldSpec f = pres.field();
  KoszulData k;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<SparseVec> cur;
    if (n <= 1) {
      cur = units(f, t.dim(n));
    } else {
      cur = echelon_rows(relation_piece(t, pres, n, 0));
      for (int i = 1; i <= n - 2 && !cur.empty(); ++i) cur = exactlin::intersect(f, cur, relation_piece(t, pres, n, i));
      SparseEchelon e(f, t.dim(n), true);
      for (auto& v : cur) e.insert(std::move(v));
      cur = echelon_rows(e);
    }
    k.K.push_back(to_subspace(f, t.dim(n), cur));
    k.basis.push_back(std::move(cur));
  }
  return k;
}

KoszulData koszul_generators(const QuadraticPresentation& pres, int n_max) {
  return koszul_generators(TensorPowers(pres.M(), n_max), pres, n_max);
}

KoszulData koszul_generators_recursive(const TensorPowers& t, const QuadraticPresentation& pres, int n_max) {
  const FieldSpec f = pres.field();
  KoszulData k;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<SparseVec> cur;
    if (n <= 1) {
      cur = units(f, t.dim(n));
    } else {
      std::vector<SparseVec> km;
      for (const auto& v : k.basis[n - 1])
        for (std::size_t l = 0; l < t.M().dim(); ++l) km.push_back(t.append(n - 1, v, l));
      cur = exactlin::intersect(f, km, relation_piece(t, pres, n, n - 2));
      SparseEchelon e(f, t.dim(n), true);
      for (auto& v : cur) e.insert(std::move(v));
      cur = echelon_rows(e);
    }
    k.K.push_back(to_subspace(f, t.dim(n), cur));
    k.basis.push_back(std::move(cur));
  }
  return k;
}

ChainComplex koszul_resolution(const GradedAlgebra& b, const KoszulData& k, int deg_max) {
  const TensorPowers& t = b.tensor();
  const FieldSpec f = b.presentation().field();
  const FiniteAlgebra& s = b.presentation().S();
  if (deg_max > b.max_degree() || deg_max > t.max_degree() || static_cast<int>(k.K.size()) <= deg_max)
    throw Error(ErrorCode::ValidationError, "koszul_resolution: pieces not computed to degree " + std::to_string(deg_max));
  ChainComplex cx;
  cx.name = "koszul resolution";
  for (int d = 0; d <= deg_max; ++d) {
    std::vector<TensorSpace> sp;
    for (int n = 0; n <= d; ++n) {
      check_cap(t.dim(n) * b.dim(d - n), "K_n (x) B");
      sp.emplace_back(t.bimodule(n), b.bimodule(d - n));
    }
    std::vector<Position> pos;
    Position aug;
    aug.tag = "S";
    aug.ambient = d == 0 ? s.dim() : 0;
    aug.whole = true;
    pos.push_back(std::move(aug));
    for (int n = 0; n <= d; ++n) {
      Position p;
      p.tag = "K_" + std::to_string(n) + "(x)B_" + std::to_string(d - n);
      p.ambient = sp[n].dim();
      for (const auto& kv : k.basis[n])
        for (std::size_t y = 0; y < b.dim(d - n); ++y) p.generators.push_back(sp[n].project(kv, unit_vec(f, y)));
      const TensorSpace* here = &sp[n];
      const TensorSpace* below = n > 0 ? &sp[n - 1] : nullptr;
      const int m = d - n;
      if (n == 0) {
        p.d = [&, here, m](std::size_t q) {
          if (m != 0) return SparseVec();
          auto [x, y] = here->lift_pair(q);
          return s.product_sparse(x, y);
        };
      } else {
        p.d = [&, here, below, n, m](std::size_t q) {
          auto [x, y] = here->lift_pair(q);
          SparseVec prefix;
          std::size_t letter;
          if (n == 1) {
            prefix = t.unit();
            letter = x;
          } else {
            auto [a, l] = t.split(n, x);
            prefix = unit_vec(f, a);
            letter = l;
          }
          return below->project(prefix, b.multiply(1, unit_vec(f, letter), m, unit_vec(f, y)));
        };
      }
      pos.push_back(std::move(p));
    }
    cx.strands.push_back(assemble(f, d, pos));
  }
  return cx;
}

ChainComplex koszul_resolution(const QuadraticPresentation& pres, int deg_max) {
  GradedAlgebra b(pres, deg_max);
  return koszul_resolution(b, koszul_generators(b.tensor(), pres, deg_max), deg_max);
}

namespace {

// B_a (x)_S T_n (x)_S B_b as (B_a (x) T_n) (x) B_b.
struct Block {
  int a = 0, n = 0, b = 0;
  std::size_t offset = 0;
  std::shared_ptr<TensorSpace> inner, outer;
};

}  // namespace

ChainComplex bimodule_complex(const GradedAlgebra& b, const KoszulData& k, int deg_max) {
  const TensorPowers& t = b.tensor();
  const FieldSpec f = b.presentation().field();
  if (deg_max > b.max_degree() || static_cast<int>(k.K.size()) <= deg_max)
    throw Error(ErrorCode::ValidationError, "bimodule_complex: pieces not computed to degree " + std::to_string(deg_max));
  ChainComplex cx;
  cx.name = "bimodule koszul complex";
  for (int d = 0; d <= deg_max; ++d) {
    // blocks[n] lists the blocks of position n + 1, indexed by a.
    std::vector<std::vector<Block>> blocks(d + 1);
    std::vector<std::size_t> ambient(d + 1, 0);
    for (int n = 0; n <= d; ++n)
      for (int a = 0; a <= d - n; ++a) {
        Block bl{a, n, d - n - a, ambient[n], nullptr, nullptr};
        check_cap(b.dim(a) * t.dim(n), "B (x) K_n");
        bl.inner = std::make_shared<TensorSpace>(b.bimodule(a), t.bimodule(n));
        check_cap(bl.inner->dim() * b.dim(bl.b), "B (x) K_n (x) B");
        bl.outer = std::make_shared<TensorSpace>(bl.inner->as_bimodule(), b.bimodule(bl.b));
        ambient[n] += bl.outer->dim();
        blocks[n].push_back(bl);
      }
    auto embed = [&](int n, int a, const SparseVec& x, const SparseVec& mid, const SparseVec& y) {
      const Block& bl = blocks[n][a];
      return bl.outer->project(bl.inner->project(x, mid), y).shifted(bl.offset);
    };
    std::vector<Position> pos;
    Position top;
    top.tag = "B_" + std::to_string(d);
    top.ambient = b.dim(d);
    top.whole = true;
    pos.push_back(std::move(top));
    for (int n = 0; n <= d; ++n) {
      Position p;
      p.tag = "B(x)K_" + std::to_string(n) + "(x)B";
      p.ambient = ambient[n];
      for (const auto& bl : blocks[n])
        for (std::size_t x = 0; x < b.dim(bl.a); ++x)
          for (const auto& kv : k.basis[n])
            for (std::size_t y = 0; y < b.dim(bl.b); ++y)
              p.generators.push_back(embed(n, bl.a, unit_vec(f, x), kv, unit_vec(f, y)));
      p.d = [&, n](std::size_t q) {
        std::size_t bi = 0;
        while (bi + 1 < blocks[n].size() && blocks[n][bi + 1].offset <= q) ++bi;
        const Block& bl = blocks[n][bi];
        auto [u, y] = bl.outer->lift_pair(q - bl.offset);
        auto [x, tt] = bl.inner->lift_pair(u);
        const SparseVec ex = unit_vec(f, x), ey = unit_vec(f, y);
        if (n == 0) return b.multiply(bl.a, b.multiply(bl.a, ex, 0, unit_vec(f, tt)), bl.b, ey);
        const Word& w = t.word(n, tt);
        Word tail(w.begin() + 1, w.end()), head(w.begin(), w.end() - 1);
        SparseVec first = embed(n - 1, bl.a + 1, b.multiply(bl.a, ex, 1, unit_vec(f, w.front())), t.project_word(tail), ey);
        SparseVec second = embed(n - 1, bl.a, ex, t.project_word(head), b.multiply(1, unit_vec(f, w.back()), bl.b, ey));
        return n % 2 == 0 ? first + second : first - second;
      };
      pos.push_back(std::move(p));
    }
    cx.strands.push_back(assemble(f, d, pos));
  }
  return cx;
}

ChainComplex bimodule_complex(const QuadraticPresentation& pres, int deg_max) {
  GradedAlgebra b(pres, deg_max);
  return bimodule_complex(b, koszul_generators(b.tensor(), pres, deg_max), deg_max);
}

VerdictReport is_koszul(const QuadraticPresentation& pres, int deg_max) {
  VerdictReport r;
  r.title = "Koszul up to degree " + std::to_string(deg_max);
  GradedAlgebra b(pres, deg_max);
  for (int i = 1; i <= deg_max; ++i) {
    const std::string deg = std::to_string(i);
    r.add("B_" + deg + " right projective", algebra::is_projective(b.bimodule(i), algebra::Side::Right));
    r.add("B_" + deg + " left projective", algebra::is_projective(b.bimodule(i), algebra::Side::Left));
  }
  KoszulData k = koszul_generators(b.tensor(), pres, deg_max);
  ChainComplex cx = koszul_resolution(b, k, deg_max);
  r.merge(cx.certify(deg_max), "koszul complex: ");
  Table dims{"dimensions", {"n", "dim B_n", "dim K_n"}, {}};
  for (int n = 0; n <= deg_max; ++n)
    dims.rows.push_back({std::to_string(n), std::to_string(b.dim(n)), std::to_string(k.dim(n))});
  r.tables.push_back(std::move(dims));
  r.notes.push_back("truncated certificate: projectivity and exactness checked only up to internal degree " +
                    std::to_string(deg_max));
  return r;
}

}  // namespace pbwkit::quadratic
