#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pbwkit/exactlin/matrix.hpp"

// Sparse storage for the large tensor-power computations. The public API of
// the library speaks dense Matrix/Subspace; these types stay behind it.
namespace pbwkit::exactlin {

struct SparseEntry {
  std::size_t index;
  Scalar value;
};

/// Entries sorted by index, no explicit zeros.
class SparseVec {
 public:
  SparseVec() = default;

  static SparseVec unit(std::size_t i, const Scalar& one) { return SparseVec({{i, one}}); }
  static SparseVec from_dense(const Vector& v);

  const std::vector<SparseEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const SparseEntry& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Appends an entry; index must exceed every stored index.
  void push_back(std::size_t index, Scalar value);
  Scalar at(std::size_t index) const;
  Vector to_dense(FieldSpec field, std::size_t n) const;

  /// this += c * other
  void axpy(const Scalar& c, const SparseVec& other);
  SparseVec scaled(const Scalar& c) const;
  SparseVec operator-() const {
    return empty() ? SparseVec() : scaled(Scalar::residue(-1, entries_[0].value.modulus()));
  }
  /// Shifts every index by offset.
  SparseVec shifted(std::size_t offset) const;

  friend SparseVec operator+(const SparseVec& a, const SparseVec& b);
  friend SparseVec operator-(const SparseVec& a, const SparseVec& b);
  friend bool operator==(const SparseVec& a, const SparseVec& b);
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

 private:
  explicit SparseVec(std::vector<SparseEntry> e) : entries_(std::move(e)) {}
  std::vector<SparseEntry> entries_;
};

/// Collects unsorted contributions and merges them into a SparseVec.
class SparseBuilder {
 public:
  void add(std::size_t index, const Scalar& value) {
    if (!value.is_zero()) pending_.push_back({index, value});
  }
  void add(const SparseVec& v, const Scalar& c);
  void add(const SparseVec& v) {
    for (const auto& e : v) pending_.push_back(e);
  }
  SparseVec finish();
  bool empty() const noexcept { return pending_.empty(); }

 private:
  std::vector<SparseEntry> pending_;
};

/// Column-stored sparse matrix: columns()[j] is the image of basis vector j.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix from_dense(const Matrix& m);
  static SparseMatrix identity(FieldSpec field, std::size_t n);

  FieldSpec field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const SparseVec& column(std::size_t j) const { return columns_[j]; }
  void set_column(std::size_t j, SparseVec v) { columns_[j] = std::move(v); }
  const std::vector<SparseVec>& columns() const noexcept { return columns_; }

  SparseVec apply(const SparseVec& x) const;
  Vector apply(const Vector& x) const;
  /// this * other
  SparseMatrix compose(const SparseMatrix& other) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& c) const;
  bool is_zero() const;
  Matrix to_dense() const;
  std::size_t nonzeros() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  FieldSpec field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> columns_;
};

/// Incremental echelon basis of sparse vectors. The pivot of a row is its
/// smallest index, normalized to 1. With full reduction every pivot column is
/// zero in all other rows, which makes reduce() a normal form.
class SparseEchelon {
 public:
  SparseEchelon() = default;
  SparseEchelon(FieldSpec field, std::size_t ambient, bool fully_reduced = true)
      : field_(field), ambient_(ambient), fully_reduced_(fully_reduced) {}

  FieldSpec field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::map<std::size_t, SparseVec>& rows() const noexcept { return rows_; }
  bool fully_reduced() const noexcept { return fully_reduced_; }
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }

  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  /// Returns true when v was independent of the stored rows.
  bool insert(SparseVec v);

  std::vector<std::size_t> pivots() const;
  std::vector<std::size_t> non_pivots() const;

 private:
  FieldSpec field_{};
  std::size_t ambient_ = 0;
  bool fully_reduced_ = true;
  std::map<std::size_t, SparseVec> rows_;
};

/// Rank of a sparse matrix via column insertion.
std::size_t rank(const SparseMatrix& m);

/// Basis of {x : rows[i] . x = 0 for all i} in k^n (free unknowns in
/// increasing order, each with coefficient 1).
std::vector<SparseVec> sparse_kernel(FieldSpec field, std::size_t n, const std::vector<SparseVec>& rows);

/// Solves the sparse system rows[i] . x = rhs[i] over n unknowns by echelon
/// elimination with smallest-index pivots; free unknowns are set to zero.
/// Returns nothing when the system is inconsistent.
std::optional<Vector> solve_sparse(FieldSpec field, std::size_t n, const std::vector<SparseVec>& rows,
                                   const std::vector<Scalar>& rhs);

/// The same system for several right-hand sides (rhs[j][i] for row i) with
/// one elimination. Returns nothing when any of them is inconsistent.
std::optional<std::vector<Vector>> solve_sparse_many(FieldSpec field, std::size_t n, const std::vector<SparseVec>& rows,
                                                     const std::vector<std::vector<Scalar>>& rhs);

/// Basis of span(a) cap span(b), b given as an echelon over the same ambient.
std::vector<SparseVec> intersect(FieldSpec field, const std::vector<SparseVec>& a, const SparseEchelon& b);

/// Quotient of k^n by a subspace given by a fully reduced echelon. Quotient
/// coordinates are the non-pivot columns in increasing order; the section
/// sends quotient coordinate q to the unit vector of its column.
class Quotient {
 public:
  Quotient() = default;
  explicit Quotient(SparseEchelon relations);

  std::size_t ambient_dim() const noexcept { return relations_.ambient(); }
  std::size_t dim() const noexcept { return lift_.size(); }
  const SparseEchelon& relations() const noexcept { return relations_; }

  /// Projection of the ambient unit vector e_i.
  const SparseVec& project_index(std::size_t i) const { return proj_[i]; }
  SparseVec project(const SparseVec& v) const;
  std::size_t lift_index(std::size_t q) const { return lift_[q]; }
  SparseVec lift(const SparseVec& q) const;

 private:
  SparseEchelon relations_;
  std::vector<std::size_t> lift_;
  std::vector<SparseVec> proj_;
};

}  // namespace pbwkit::exactlin
