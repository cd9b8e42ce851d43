#include "pbwkit/quadratic/complex.hpp"

#include "pbwkit/error.hpp"

namespace pbwkit::quadratic {

const Strand& ChainComplex::strand(int degree) const {
  for (const auto& s : strands)
    if (s.internal_degree == degree) return s;
  throw Error(ErrorCode::ValidationError, name + ": no strand in internal degree " + std::to_string(degree));
}

std::optional<std::size_t> ChainComplex::d_squared_failure(int degree) const {
  const Strand& s = strand(degree);
  for (std::size_t p = 2; p < s.diffs.size(); ++p)
    if (!s.diffs[p - 1].compose(s.diffs[p]).is_zero()) return p;
  return std::nullopt;
}

std::vector<std::size_t> ChainComplex::homology(int degree) const {
  const Strand& s = strand(degree);
  const std::size_t n = s.terms.size();
  std::vector<std::size_t> rk(n + 1, 0);
  for (std::size_t p = 1; p < n; ++p) rk[p] = exactlin::rank(s.diffs[p]);
  std::vector<std::size_t> h(n);
  for (std::size_t p = 0; p < n; ++p) h[p] = s.terms[p].dim - rk[p] - rk[p + 1];
  return h;
}

bool ChainComplex::exact(int degree) const {
  const Strand& s = strand(degree);
  auto h = homology(degree);
  for (std::size_t p = 0; p < h.size() && p < s.certified; ++p)
    if (h[p] != 0) return false;
  return true;
}

long long ChainComplex::euler_characteristic(int degree) const {
  const Strand& s = strand(degree);
  long long chi = 0;
  for (std::size_t p = 0; p < s.terms.size(); ++p)
    chi += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(s.terms[p].dim);
  return chi;
}

VerdictReport ChainComplex::certify(int max_degree) const {
  VerdictReport r;
  r.title = name;
  Table t{"strands", {"degree", "dims", "homology"}, {}};
  for (const auto& s : strands) {
    if (s.internal_degree > max_degree) continue;
    const int d = s.internal_degree;
    const std::string deg = std::to_string(d);
    auto bad = d_squared_failure(d);
    r.add("d^2=0 in degree " + deg, !bad.has_value(), {},
          bad ? "position " + std::to_string(*bad) + " (" + s.terms[*bad].tag + ")" : std::string());
    auto h = homology(d);
    std::string dims, hom, witness;
    for (std::size_t p = 0; p < h.size(); ++p) {
      dims += (p ? " " : "") + std::to_string(s.terms[p].dim);
      hom += (p ? " " : "") + std::to_string(h[p]);
      if (h[p] != 0 && witness.empty() && p < s.certified)
        witness = "homology " + std::to_string(h[p]) + " at " + s.terms[p].tag + " (internal degree " + deg + ")";
    }
    r.add("exact in degree " + deg, witness.empty(), {}, witness);
    t.rows.push_back({deg, dims, hom});
  }
  r.tables.push_back(std::move(t));
  return r;
}

}  // namespace pbwkit::quadratic
