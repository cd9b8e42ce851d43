#include "pbwkit/gorenstein/gorenstein.hpp"

#include <tuple>

#include "pbwkit/algebra/section.hpp"
#include "pbwkit/error.hpp"
#include "pbwkit/exactlin/linalg.hpp"
#include "pbwkit/pbw/oracle.hpp"
#include "pbwkit/pbw/theorems.hpp"
#include "pbwkit/quadratic/koszul.hpp"

namespace pbwkit::gorenstein {

using algebra::Bimodule;
using exactlin::Scalar;
using exactlin::SparseVec;
using quadratic::GradedAlgebra;
using quadratic::KoszulData;
using quadratic::TensorPowers;

bool check_selfinjective(const FiniteAlgebra& s) {
  return algebra::is_projective(algebra::dual_bimodule(s), algebra::Side::Left);
}

namespace {

// Hom_S(K_i, B_j) with the dualized Koszul differential.
class DualKoszul {
 public:
  DualKoszul(const QuadraticPresentation& pres, int i_max, int j_max)
      : f_(pres.field()), t_(pres.M(), i_max + 1), k_(quadratic::koszul_generators(t_, pres, i_max + 1)),
        b_(pres, std::max(j_max, 1)), i_max_(i_max) {
    for (int i = 0; i <= i_max + 1; ++i) kb_.push_back(t_.bimodule(i).restrict_to(k_.K[i]));
    for (int i = 0; i <= i_max; ++i) {
      // basis b of K_{i+1} as sum c (kappa_a (x) m) in K_i (x)_S M
      algebra::TensorSpace ks(kb_[i], pres.M());
      const std::size_t dt = t_.dim(i + 1);
      Matrix j(f_, dt, ks.dim());
      for (std::size_t q = 0; q < ks.dim(); ++q) {
        auto [ka, m] = ks.lift_pair(q);
        SparseVec kv = SparseVec::from_dense(k_.K[i].basis_vector(ka));
        SparseVec img = i == 0 ? pres.M().left_by(k_.K[0].basis_vector(ka)).column(m)
                               : t_.space(i + 1).project(kv, SparseVec::unit(m, f_.one()));
        for (const auto& e : img) j(e.index, q) = e.value;
      }
      std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> pre;
      for (std::size_t bb = 0; bb < k_.dim(i + 1); ++bb) {
        auto u = exactlin::solve_affine(j, k_.K[i + 1].basis_vector(bb));
        if (!u) throw Error(ErrorCode::ValidationError, "K_{i+1} not inside K_i (x)_S M");
        std::vector<std::tuple<std::size_t, std::size_t, Scalar>> terms;
        for (std::size_t q = 0; q < u->size(); ++q)
          if (!(*u)[q].is_zero()) {
            auto [ka, m] = ks.lift_pair(q);
            terms.emplace_back(ka, m, (*u)[q]);
          }
        pre.push_back(std::move(terms));
      }
      pre_.push_back(std::move(pre));
    }
  }

  std::size_t k_dim(int i) const { return i <= i_max_ + 1 ? k_.dim(i) : 0; }
  const GradedAlgebra& B() const { return b_; }

  // Basis of Hom_S(K_i, B_j), flattened row * dim K_i + col.
  std::vector<Vector> hom(int i, int j) const {
    std::vector<Vector> out;
    if (j < 0 || j > b_.max_degree() || k_dim(i) == 0 || b_.dim(j) == 0) return out;
    for (const auto& m : algebra::hom_right_S(kb_[i], b_.bimodule(j))) out.push_back(flatten(m));
    return out;
  }

  Vector flatten(const Matrix& m) const {
    Vector v;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
  }

  // (d^* F)(kappa') = sum c F(kappa_a) m.
  Vector dual_d(int i, int j, const Vector& flat) const {
    const std::size_t dk = k_dim(i), dk1 = k_dim(i + 1), db1 = b_.dim(j + 1);
    Vector out(db1 * dk1, f_.zero());
    for (std::size_t bb = 0; bb < dk1; ++bb)
      for (const auto& [ka, m, c] : pre_[i][bb]) {
        SparseVec col;
        for (std::size_t r = 0; r < b_.dim(j); ++r)
          if (!flat[r * dk + ka].is_zero()) col.push_back(r, flat[r * dk + ka]);
        for (const auto& e : b_.multiply(j, col, 1, SparseVec::unit(m, f_.one()))) out[e.index * dk1 + bb] += c * e.value;
      }
    return out;
  }

  bool has_next(int i, int j) const { return i + 1 <= i_max_ + 1 && k_dim(i + 1) > 0 && j + 1 <= b_.max_degree(); }

  struct Cohomology {
    std::vector<Vector> cycles;
    exactlin::Subspace boundaries;
    std::vector<Vector> reps;  // cycles independent modulo boundaries
  };

  Cohomology cohomology(int i, int j) const {
    Cohomology out;
    auto h = hom(i, j);
    const std::size_t amb = (j >= 0 && j <= b_.max_degree() ? b_.dim(j) : 0) * k_dim(i);
    out.boundaries = exactlin::Subspace(f_, amb);
    if (h.empty()) return out;
    if (has_next(i, j)) {
      std::vector<Vector> cols;
      for (const auto& v : h) cols.push_back(dual_d(i, j, v));
      Matrix d = Matrix::from_columns(f_, b_.dim(j + 1) * k_dim(i + 1), cols);
      auto ker = exactlin::kernel(d);
      for (std::size_t k = 0; k < ker.dim(); ++k) {
        Vector c = ker.basis_vector(k), z(amb, f_.zero());
        for (std::size_t a = 0; a < h.size(); ++a)
          if (!c[a].is_zero()) z = exactlin::add(z, exactlin::scale(c[a], h[a]));
        out.cycles.push_back(z);
      }
    } else {
      out.cycles = h;
    }
    if (i >= 1) {
      std::vector<Vector> im;
      for (const auto& v : hom(i - 1, j - 1)) im.push_back(dual_d(i - 1, j - 1, v));
      out.boundaries = exactlin::Subspace::span(f_, amb, im);
    }
    exactlin::Subspace acc = out.boundaries;
    for (const auto& z : out.cycles) {
      if (acc.contains(z)) continue;
      out.reps.push_back(z);
      acc = exactlin::sum(acc, exactlin::Subspace::span(f_, amb, {z}));
    }
    return out;
  }

 private:
  FieldSpec f_;
  TensorPowers t_;
  KoszulData k_;
  GradedAlgebra b_;
  int i_max_;
  std::vector<Bimodule> kb_;
  std::vector<std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>>> pre_;
};

int top_nonzero(const QuadraticPresentation& pres, int i_max) {
  auto k = quadratic::koszul_generators(pres, i_max);
  int top = 0;
  for (int i = 0; i <= i_max; ++i)
    if (k.dim(i) > 0) top = i;
  return top;
}

Bimodule ext_module_from(const DualKoszul& dk, const FiniteAlgebra& s, int d, int e) {
  const FieldSpec f = s.field();
  const int j = d + e;
  auto h = dk.cohomology(d, j);
  const std::size_t n = h.reps.size(), kd = dk.k_dim(d);
  std::vector<Vector> cols = h.boundaries.basis_vectors();
  const std::size_t nb = cols.size();
  for (const auto& r : h.reps) cols.push_back(r);
  const std::size_t amb = cols.empty() ? 0 : cols[0].size();
  Matrix basis = Matrix::from_columns(f, amb, cols);
  std::vector<exactlin::SparseMatrix> left, right;
  for (std::size_t t = 0; t < s.dim(); ++t) {
    const auto& act = dk.B().bimodule(j).left(t);
    exactlin::SparseMatrix m(f, n, n);
    for (std::size_t c = 0; c < n; ++c) {
      Vector moved(amb, f.zero());
      for (std::size_t r = 0; r < dk.B().dim(j); ++r)
        for (std::size_t k = 0; k < kd; ++k) {
          const Scalar& x = h.reps[c][r * kd + k];
          if (x.is_zero()) continue;
          for (const auto& e2 : act.column(r)) moved[e2.index * kd + k] += x * e2.value;
        }
      auto coords = exactlin::solve_affine(basis, moved);
      if (!coords) throw Error(ErrorCode::ValidationError, "left action leaves the cycles of Ext");
      Vector tail(coords->begin() + static_cast<std::ptrdiff_t>(nb), coords->end());
      m.set_column(c, SparseVec::from_dense(tail));
    }
    left.push_back(m);
    right.push_back(exactlin::SparseMatrix::identity(f, n).scaled(s.unit()[t]));  // unused side
  }
  return Bimodule::trusted(s, n, std::move(left), std::move(right));
}

ExtTable ext_table(const DualKoszul& dk, int i_max, int lo, int hi) {
  ExtTable out{i_max, lo, hi, {}};
  for (int i = 0; i <= i_max; ++i) {
    std::vector<std::size_t> row;
    for (int e = lo; e <= hi; ++e) row.push_back(dk.cohomology(i, i + e).reps.size());
    out.dims.push_back(std::move(row));
  }
  return out;
}

void certify_side(VerdictReport& rep, const std::string& side, const QuadraticPresentation& pres, int d, int l, int lo,
                  int hi, std::uint64_t seed, std::size_t budget, ExtTable& table) {
  const int i_max = d + 1;
  DualKoszul dk(pres, i_max, hi + std::max(top_nonzero(pres, i_max), d));
  table = ext_table(dk, i_max, lo, hi);
  rep.add(side + "K_" + std::to_string(d + 1) + " = 0", dk.k_dim(d + 1) == 0, "Koszul resolution stops at d",
          dk.k_dim(d + 1) == 0 ? "" : "dim K_" + std::to_string(d + 1) + " = " + std::to_string(dk.k_dim(d + 1)));
  for (int i = 0; i <= i_max; ++i) {
    if (i == d) continue;
    std::string w;
    for (int e = lo; e <= hi && w.empty(); ++e)
      if (table.at(i, e) != 0) w = "dim Ext^" + std::to_string(i) + " = " + std::to_string(table.at(i, e)) + " in degree " + std::to_string(e);
    rep.add(side + "Ext^" + std::to_string(i) + " vanishes", w.empty(), "", w);
  }
  const std::size_t ds = pres.S().dim();
  std::string w;
  for (int e = lo; e <= hi && w.empty(); ++e) {
    const std::size_t want = e == -l ? ds : 0;
    if (table.at(d, e) != want)
      w = "degree " + std::to_string(e) + ": dim " + std::to_string(table.at(d, e)) + ", expected " + std::to_string(want);
  }
  rep.add(side + "Ext^" + std::to_string(d) + " dims match D(S)(" + std::to_string(l) + ")", w.empty(), "", w);
  if (-l < lo || -l > hi) {
    rep.add(side + "Ext^" + std::to_string(d) + " iso D(S)", Status::Undecided, "degree -l outside the window");
    return;
  }
  if (!w.empty()) {
    rep.add(side + "Ext^" + std::to_string(d) + " iso D(S)", Status::Fail, "dimension mismatch");
    return;
  }
  Bimodule ext = ext_module_from(dk, pres.S(), d, -l);
  std::mt19937_64 rng(seed);
  auto iso = algebra::find_isomorphism(ext, algebra::dual_bimodule(pres.S()), true, false, rng, budget);
  Status st = iso.status == algebra::IsoStatus::Found           ? Status::Pass
              : iso.status == algebra::IsoStatus::NotIsomorphic ? Status::Fail
                                                                : Status::Undecided;
  rep.add(side + "Ext^" + std::to_string(d) + " iso D(S)", st,
          "left S-modules, " + std::to_string(iso.trials) + " trials");
}

}  // namespace

ExtTable ext_via_koszul(const QuadraticPresentation& pres, int i_max, int lo, int hi) {
  DualKoszul dk(pres, i_max, hi + top_nonzero(pres, i_max));
  return ext_table(dk, i_max, lo, hi);
}

Bimodule ext_module(const QuadraticPresentation& pres, int d, int e) {
  DualKoszul dk(pres, d, d + e);
  return ext_module_from(dk, pres.S(), d, e);
}

QuadraticPresentation opposite_presentation(const QuadraticPresentation& pres) {
  const Bimodule mop = pres.M().opposite();
  const std::size_t dm = pres.M().dim();
  std::vector<Vector> rel;
  for (const auto& r : pres.relation_basis()) {
    Vector v(dm * dm, pres.field().zero());
    for (const auto& e : pres.T2().quotient().lift(r)) v[(e.index % dm) * dm + e.index / dm] = e.value;
    rel.push_back(v);
  }
  return QuadraticPresentation::from_ambient(mop, rel);
}

GorensteinCertificate check_gorenstein(const QuadraticPresentation& pres, int d, int l, int lo, int hi,
                                       std::uint64_t seed, std::size_t trial_budget) {
  GorensteinCertificate out;
  out.d = d;
  out.l = l;
  out.lo = lo;
  out.hi = hi;
  out.report.title = "Gorenstein certificate";
  out.selfinjective = check_selfinjective(pres.S());
  out.report.add("S selfinjective", out.selfinjective);
  certify_side(out.report, "right: ", pres, d, l, lo, hi, seed, trial_budget, out.ext);
  certify_side(out.report, "left: ", opposite_presentation(pres), d, l, lo, hi, seed, trial_budget, out.ext_left);
  out.report.notes.push_back("window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return out;
}

SigmaData extract_sigma(const QuadraticPresentation& pres, std::uint64_t seed, std::size_t budget) {
  const FiniteAlgebra& s = pres.S();
  const FieldSpec f = pres.field();
  const std::size_t ds = s.dim(), dr = pres.R().dim();
  if (dr != ds) throw Error(ErrorCode::DimMismatch, "dim R = " + std::to_string(dr) + " but dim S = " + std::to_string(ds));
  const Bimodule rb = pres.R_bimodule();
  auto right_map = [&](const Vector& r0) {
    Matrix m(f, dr, ds);
    for (std::size_t t = 0; t < ds; ++t) {
      Vector c = rb.right(t).apply(r0);
      for (std::size_t i = 0; i < dr; ++i) m(i, t) = c[i];
    }
    return m;
  };
  std::mt19937_64 rng(seed);
  SigmaData out;
  std::optional<Matrix> inv;
  while (!inv && out.trials < budget) {
    ++out.trials;
    out.r0 = exactlin::random_vector(f, dr, rng);
    inv = exactlin::inverse(right_map(out.r0));
  }
  if (!inv)
    throw Error(ErrorCode::NoFreeGenerator, "no free right generator of R in " + std::to_string(budget) + " trials (undecided)");
  out.sigma = Matrix(f, ds, ds);
  for (std::size_t t = 0; t < ds; ++t) {
    Vector sig = inv->apply(rb.left(t).apply(out.r0));
    for (std::size_t i = 0; i < ds; ++i) out.sigma(i, t) = sig[i];
  }
  try {
    algebra::require_automorphism(s, out.sigma);
  } catch (const Error& e) {
    throw Error(ErrorCode::SigmaNotAutomorphism, e.what());
  }
  // s e - e sigma(s) = 0 for every basis s.
  std::vector<Vector> rows;
  for (std::size_t t = 0; t < ds; ++t) {
    Matrix l = Matrix(f, ds, ds), r = Matrix(f, ds, ds);
    const Vector st = exactlin::unit_vector(f, ds, t), sg = out.sigma.column(t);
    for (std::size_t c = 0; c < ds; ++c) {
      const Vector ec = exactlin::unit_vector(f, ds, c);
      Vector a = s.multiply(st, ec), b = s.multiply(ec, sg);
      for (std::size_t i = 0; i < ds; ++i) l(i, c) = a[i] - b[i];
    }
    for (std::size_t i = 0; i < ds; ++i) rows.push_back(l.row(i));
  }
  out.e_space = exactlin::kernel(Matrix::from_rows(f, ds, rows));
  return out;
}

DeformationData theta_from_e(const QuadraticPresentation& pres, const SigmaData& sd, const Vector& e) {
  const FiniteAlgebra& s = pres.S();
  const FieldSpec f = pres.field();
  const std::size_t ds = s.dim();
  const Bimodule rb = pres.R_bimodule();
  // theta o (s -> r0 s) = (s -> e s)
  Matrix gen(f, ds, ds), target(f, ds, ds);
  for (std::size_t t = 0; t < ds; ++t) {
    Vector c = rb.right(t).apply(sd.r0);
    Vector es = s.multiply(e, exactlin::unit_vector(f, ds, t));
    for (std::size_t i = 0; i < ds; ++i) {
      gen(i, t) = c[i];
      target(i, t) = es[i];
    }
  }
  auto gi = exactlin::inverse(gen);
  if (!gi) throw Error(ErrorCode::NoFreeGenerator, "r0 is not a free right generator");
  return DeformationData::theta_only(pres, target * *gi);
}

UeResult build_U_e(const QuadraticPresentation& pres, const SigmaData& sd, const Vector& e, int n_max, int n_sat) {
  if (!sd.e_space.contains(e))
    throw Error(ErrorCode::EOutsideSpace, "e = " + exactlin::to_string(e) + " fails s e = e sigma(s)");
  DeformationData d = theta_from_e(pres, sd, e);
  VerdictReport a = pbw::check_theorem_a(d);
  VerdictReport o = pbw::is_pbw_up_to(d, n_max, n_sat);
  return UeResult{std::move(d), std::move(a), std::move(o)};
}

}  // namespace pbwkit::gorenstein
