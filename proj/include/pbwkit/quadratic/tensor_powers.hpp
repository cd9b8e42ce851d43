#pragma once

#include <cstdint>
#include <vector>

#include "pbwkit/quadratic/presentation.hpp"

namespace pbwkit::quadratic {

using Word = std::vector<std::uint32_t>;

/// T_n = M^{(x)_S n} for n <= max_degree in left-nested coordinates:
/// T_0 = S, T_1 = M, T_n = T_{n-1} (x)_S M. Each basis vector of T_n is the
/// class of a pure word m_{w1} (x) ... (x) m_{wn}.
class TensorPowers {
 public:
  TensorPowers() = default;
  TensorPowers(Bimodule m, int max_degree);

  const FiniteAlgebra& S() const { return m_.algebra(); }
  const Bimodule& M() const noexcept { return m_; }
  FieldSpec field() const { return m_.field(); }
  int max_degree() const noexcept { return max_degree_; }
  std::size_t dim(int n) const { return bimodules_.at(n).dim(); }
  const Bimodule& bimodule(int n) const { return bimodules_.at(n); }
  /// T_n = T_{n-1} (x)_S M, for n >= 2.
  const TensorSpace& space(int n) const { return spaces_.at(n); }

  /// Word of basis vector q of T_n (n >= 1).
  const Word& word(int n, std::size_t q) const { return words_.at(n)[q]; }
  /// (prefix in T_{n-1}, letter) of basis vector q of T_n, n >= 2.
  std::pair<std::size_t, std::size_t> split(int n, std::size_t q) const { return spaces_.at(n).lift_pair(q); }

  /// Unit of S as an element of T_0.
  SparseVec unit() const;
  /// x (x) m_letter for x in T_n.
  SparseVec append(int n, const SparseVec& x, std::size_t letter) const;
  /// Class of a word; the empty word is the unit.
  SparseVec project_word(const Word& w) const;
  /// Concatenation product T_i x T_j -> T_{i+j}.
  SparseVec multiply(int i, const SparseVec& x, int j, const SparseVec& y) const;

 private:
  Bimodule m_;
  int max_degree_ = 0;
  std::vector<Bimodule> bimodules_;
  std::vector<TensorSpace> spaces_;
  std::vector<std::vector<Word>> words_;
};

}  // namespace pbwkit::quadratic
