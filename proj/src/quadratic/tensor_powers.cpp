#include "pbwkit/quadratic/tensor_powers.hpp"

#include "pbwkit/error.hpp"

namespace pbwkit::quadratic {

TensorPowers::TensorPowers(Bimodule m, int max_degree) : m_(std::move(m)), max_degree_(max_degree) {
  if (max_degree < 0) throw Error(ErrorCode::ValidationError, "negative tensor degree");
  bimodules_.push_back(Bimodule::regular(m_.algebra()));
  spaces_.resize(max_degree + 1);
  words_.resize(max_degree + 1);
  if (max_degree >= 1) {
    bimodules_.push_back(m_);
    for (std::size_t q = 0; q < m_.dim(); ++q) words_[1].push_back({static_cast<std::uint32_t>(q)});
  }
  for (int n = 2; n <= max_degree; ++n) {
    check_cap(bimodules_[n - 1].dim() * m_.dim(), "tensor power");
    spaces_[n] = TensorSpace(bimodules_[n - 1], m_);
    bimodules_.push_back(spaces_[n].as_bimodule());
    for (std::size_t q = 0; q < spaces_[n].dim(); ++q) {
      auto [a, l] = spaces_[n].lift_pair(q);
      Word w = words_[n - 1][a];
      w.push_back(static_cast<std::uint32_t>(l));
      words_[n].push_back(std::move(w));
    }
  }
}

SparseVec TensorPowers::unit() const { return SparseVec::from_dense(S().unit()); }

SparseVec TensorPowers::append(int n, const SparseVec& x, std::size_t letter) const {
  if (n + 1 > max_degree_) throw Error(ErrorCode::CapExceeded, "tensor degree beyond computed range");
  SparseBuilder out;
  if (n == 0) {
    for (const auto& e : x) out.add(m_.left(e.index).column(letter), e.value);
  } else {
    const TensorSpace& sp = spaces_[n + 1];
    for (const auto& e : x) out.add(sp.project_pair(e.index, letter), e.value);
  }
  return out.finish();
}

SparseVec TensorPowers::project_word(const Word& w) const {
  SparseVec v = unit();
  for (std::size_t i = 0; i < w.size(); ++i) v = append(static_cast<int>(i), v, w[i]);
  return v;
}

SparseVec TensorPowers::multiply(int i, const SparseVec& x, int j, const SparseVec& y) const {
  SparseBuilder out;
  if (j == 0) {
    for (const auto& e : y) out.add(bimodules_.at(i).right(e.index).apply(x), e.value);
  } else if (i == 0) {
    for (const auto& e : x) out.add(bimodules_.at(j).left(e.index).apply(y), e.value);
  } else {
    for (const auto& e : y) {
      SparseVec v = x;
      int deg = i;
      for (auto letter : word(j, e.index)) v = append(deg++, v, letter);
      out.add(v, e.value);
    }
  }
  return out.finish();
}

}  // namespace pbwkit::quadratic
