#include "pbwkit/pbw/oracle.hpp"

#include <algorithm>
#include <array>

#include "pbwkit/error.hpp"
#include "pbwkit/quadratic/graded.hpp"

namespace pbwkit::pbw {

bool FilteredDims::all_stabilized() const {
  return std::all_of(stabilized.begin(), stabilized.end(), [](bool b) { return b; });
}

FilteredDims oracle_filtered_dims(const DeformationData& d, int n_max, int n_sat) {
  if (n_max < 0) throw Error(ErrorCode::ValidationError, "n_max must be non-negative");
  n_sat = std::max(n_sat, std::max(n_max, 2));
  const QuadraticPresentation& pres = d.pres;
  FilteredDims out;
  out.n_max = n_max;
  out.n_sat = n_sat;
  quadratic::GradedAlgebra b(pres, n_max);
  for (int k = 0; k <= n_max; ++k) out.expected.push_back(b.dim(k));

  if (d.homogeneous()) {
    out.short_circuit = true;
    std::size_t acc = 0;
    for (int k = 0; k <= n_max; ++k) {
      acc += out.expected[k];
      out.dims.push_back(acc);
    }
    out.graded = out.expected;
    out.stabilized.assign(n_max + 1, true);
    return out;
  }

  const int top = n_sat + 1;
  quadratic::check_cap(pres.T2().dim(), "T_2");
  quadratic::TensorPowers t(pres.M(), top);
  // Higher degrees first, so the pivots of W inside T^{<=k} are those >= off[k].
  std::vector<std::size_t> off(top + 2, 0);
  for (int deg = top; deg >= 0; --deg) off[deg] = off[deg + 1] + (deg + 1 <= top ? t.dim(deg + 1) : 0);
  const std::size_t total = off[0] + t.dim(0);
  quadratic::check_cap(total, "filtered ambient T^{<=n'}");

  const FieldSpec f = pres.field();
  const auto rel = pres.relation_basis();
  // Components of g_j = r_j - phi(r_j) - theta(r_j) by degree.
  std::vector<std::array<SparseVec, 3>> gens;
  for (std::size_t j = 0; j < rel.size(); ++j)
    gens.push_back({(-SparseVec::from_dense(d.theta.column(j))), (-SparseVec::from_dense(d.phi.column(j))), rel[j]});

  exactlin::SparseEchelon w(f, total, false);
  auto dims_now = [&] {
    std::vector<std::size_t> v;
    const auto& rows = w.rows();
    std::size_t tdim = 0;
    for (int k = 0; k <= n_max; ++k) {
      tdim += t.dim(k);
      const std::size_t in_w = static_cast<std::size_t>(std::distance(rows.lower_bound(off[k]), rows.end()));
      v.push_back(tdim - in_w);
    }
    return v;
  };
  for (int np = 2; np <= top; ++np) {
    for (int i = 0; i <= np - 2; ++i) {
      const int j = np - 2 - i;
      for (std::size_t x = 0; x < t.dim(i); ++x)
        for (const auto& g : gens) {
          std::array<SparseVec, 3> left;
          for (int c = 0; c < 3; ++c)
            if (!g[c].empty()) left[c] = t.multiply(i, SparseVec::unit(x, f.one()), c, g[c]);
          for (std::size_t y = 0; y < t.dim(j); ++y) {
            SparseBuilder e;
            for (int c = 0; c < 3; ++c) {
              if (left[c].empty()) continue;
              const int deg = i + c + j;
              e.add(t.multiply(i + c, left[c], j, SparseVec::unit(y, f.one())).shifted(off[deg]));
            }
            w.insert(e.finish());
          }
        }
    }
    out.snapshots.push_back(dims_now());
  }
  out.dims = out.snapshots[n_sat - 2];
  const auto& next = out.snapshots[n_sat - 1];
  for (int k = 0; k <= n_max; ++k) {
    out.graded.push_back(out.dims[k] - (k > 0 ? out.dims[k - 1] : 0));
    out.stabilized.push_back(out.dims[k] == next[k]);
  }
  return out;
}

VerdictReport oracle_report(const FilteredDims& fd) {
  VerdictReport rep;
  rep.title = "filtered dimension oracle";
  std::string bound, mono;
  for (int k = 0; k <= fd.n_max; ++k)
    if (fd.graded[k] > fd.expected[k] && bound.empty())
      bound = "k=" + std::to_string(k) + ": dim F_k/F_{k-1} = " + std::to_string(fd.graded[k]) + " > dim B_k = " +
              std::to_string(fd.expected[k]);
  for (std::size_t j = 1; j < fd.snapshots.size(); ++j)
    for (int k = 0; k <= fd.n_max; ++k)
      if (fd.snapshots[j][k] > fd.snapshots[j - 1][k] && mono.empty())
        mono = "k=" + std::to_string(k) + ": dim F_k grows from " + std::to_string(fd.snapshots[j - 1][k]) + " to " +
               std::to_string(fd.snapshots[j][k]) + " at n'=" + std::to_string(j + 2);
  rep.add("gr U bound", bound.empty(), "dim F_k/F_{k-1} <= dim B_k", bound);
  rep.add("saturation monotone", mono.empty(), "dim F_k non-increasing in n'", mono);

  std::string unstable;
  for (int k = 0; k <= fd.n_max; ++k)
    if (!fd.stabilized[k]) unstable += (unstable.empty() ? "k=" : ",") + std::to_string(k);
  rep.add("stabilized", unstable.empty() ? Status::Pass : Status::Undecided,
          "n'=" + std::to_string(fd.n_sat) + " and n'=" + std::to_string(fd.n_sat + 1) + " agree",
          unstable.empty() ? "" : "not stabilized at " + unstable);

  std::string short_k;
  std::size_t acc = 0;
  for (int k = 0; k <= fd.n_max && short_k.empty(); ++k) {
    acc += fd.expected[k];
    if (fd.dims[k] < acc)
      short_k = "k=" + std::to_string(k) + ": dim F_k U = " + std::to_string(fd.dims[k]) + " < " + std::to_string(acc) +
                " = sum of dim B_i";
  }
  // Computed dims bound the true ones from above, so a deficit is final.
  Status pbw = !short_k.empty() ? Status::Fail : (unstable.empty() ? Status::Pass : Status::Undecided);
  rep.add("PBW up to degree " + std::to_string(fd.n_max), pbw, fd.short_circuit ? "homogeneous relations" : "", short_k);

  Table tab{"filtered dims", {"k", "dim F_k U", "dim F_k/F_{k-1}", "dim B_k", "stabilized"}, {}};
  for (int k = 0; k <= fd.n_max; ++k)
    tab.rows.push_back({std::to_string(k), std::to_string(fd.dims[k]), std::to_string(fd.graded[k]),
                        std::to_string(fd.expected[k]), fd.stabilized[k] ? "yes" : "no"});
  rep.tables.push_back(std::move(tab));
  return rep;
}

VerdictReport is_pbw_up_to(const DeformationData& d, int n_max, int n_sat) {
  return oracle_report(oracle_filtered_dims(d, n_max, n_sat));
}

}  // namespace pbwkit::pbw
