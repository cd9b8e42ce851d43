#include "pbwkit/exactlin/sparse.hpp"

#include <algorithm>

#include "pbwkit/error.hpp"

namespace pbwkit::exactlin {

SparseVec SparseVec::from_dense(const Vector& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.entries_.push_back({i, v[i]});
  return out;
}

void SparseVec::push_back(std::size_t index, Scalar value) {
  if (value.is_zero()) return;
  if (!entries_.empty() && entries_.back().index >= index)
    throw Error(ErrorCode::ValidationError, "SparseVec::push_back out of order at " + std::to_string(index));
  entries_.push_back({index, std::move(value)});
}

Scalar SparseVec::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return Scalar();
}

Vector SparseVec::to_dense(FieldSpec field, std::size_t n) const {
  Vector v(n, field.zero());
  for (const auto& e : entries_) {
    if (e.index >= n) throw Error(ErrorCode::DimensionMismatch, "sparse index " + std::to_string(e.index) + " >= " + std::to_string(n));
    v[e.index] = field.coerce(e.value);
  }
  return v;
}

void SparseVec::axpy(const Scalar& c, const SparseVec& other) {
  if (c.is_zero() || other.empty()) return;
  std::vector<SparseEntry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin(), ae = entries_.end();
  auto b = other.entries_.begin(), be = other.entries_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->index < b->index)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == ae || b->index < a->index) {
      out.push_back({b->index, c * b->value});
      ++b;
    } else {
      Scalar v = a->value + c * b->value;
      if (!v.is_zero()) out.push_back({a->index, std::move(v)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVec SparseVec::scaled(const Scalar& c) const {
  SparseVec out;
  if (c.is_zero()) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& e : entries_) out.entries_.push_back({e.index, e.value * c});
  return out;
}

SparseVec SparseVec::shifted(std::size_t offset) const {
  SparseVec out = *this;
  for (auto& e : out.entries_) e.index += offset;
  return out;
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
  if (b.empty()) return a;
  SparseVec out = a;
  out.axpy(Scalar::residue(1, b[0].value.modulus()), b);
  return out;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
  if (b.empty()) return a;
  SparseVec out = a;
  out.axpy(Scalar::residue(-1, b[0].value.modulus()), b);
  return out;
}

bool operator==(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].index != b[i].index || a[i].value != b[i].value) return false;
  return true;
}

void SparseBuilder::add(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& e : v) pending_.push_back({e.index, e.value * c});
}

SparseVec SparseBuilder::finish() {
  std::sort(pending_.begin(), pending_.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  SparseVec out;
  std::size_t i = 0;
  while (i < pending_.size()) {
    std::size_t j = i + 1;
    Scalar v = std::move(pending_[i].value);
    while (j < pending_.size() && pending_[j].index == pending_[i].index) v += pending_[j++].value;
    if (!v.is_zero()) out.push_back(pending_[i].index, std::move(v));
    i = j;
  }
  pending_.clear();
  return out;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix out(m.field(), m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out.columns_[c] = SparseVec::from_dense(m.column(c));
  return out;
}

SparseMatrix SparseMatrix::identity(FieldSpec field, std::size_t n) {
  SparseMatrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out.columns_[i] = SparseVec::unit(i, field.one());
  return out;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  SparseBuilder b;
  for (const auto& e : x) {
    if (e.index >= cols_) throw Error(ErrorCode::DimensionMismatch, "SparseMatrix::apply index out of range");
    b.add(columns_[e.index], e.value);
  }
  return b.finish();
}

Vector SparseMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "SparseMatrix::apply length mismatch");
  return apply(SparseVec::from_dense(x)).to_dense(field_, rows_);
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::DimensionMismatch, "SparseMatrix::compose shape mismatch");
  SparseMatrix out(field_, rows_, other.cols_);
  for (std::size_t j = 0; j < other.cols_; ++j) out.columns_[j] = apply(other.columns_[j]);
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "SparseMatrix sum shape mismatch");
  SparseMatrix out = *this;
  for (std::size_t j = 0; j < cols_; ++j) out.columns_[j].axpy(field_.one(), o.columns_[j]);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "SparseMatrix difference shape mismatch");
  SparseMatrix out = *this;
  for (std::size_t j = 0; j < cols_; ++j) out.columns_[j].axpy(-field_.one(), o.columns_[j]);
  return out;
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
  SparseMatrix out = *this;
  for (auto& col : out.columns_) col = col.scaled(c);
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVec& v) { return v.empty(); });
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& e : columns_[c]) m(e.index, c) = field_.coerce(e.value);
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
  if (rows_.empty()) return v;
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = rows_.find(v[pos].index);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    Scalar c = -v[pos].value;
    v.axpy(c, it->second);  // clears position pos; earlier entries untouched
  }
  return v;
}

bool SparseEchelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t pivot = v[0].index;
  if (pivot >= ambient_) throw Error(ErrorCode::AmbientMismatch, "echelon insert index " + std::to_string(pivot));
  v = v.scaled(v[0].value.inverse());
  if (fully_reduced_) {
    for (auto& [p, row] : rows_) {
      if (p > pivot) break;
      Scalar c = row.at(pivot);
      if (!c.is_zero()) row.axpy(-c, v);
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<std::size_t> SparseEchelon::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& kv : rows_) out.push_back(kv.first);
  return out;
}

std::vector<std::size_t> SparseEchelon::non_pivots() const {
  std::vector<std::size_t> out;
  auto it = rows_.begin();
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (it != rows_.end() && it->first == i) {
      ++it;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

std::size_t rank(const SparseMatrix& m) {
  SparseEchelon e(m.field(), m.rows(), false);
  for (const auto& c : m.columns()) e.insert(c);
  return e.rank();
}

std::vector<SparseVec> sparse_kernel(FieldSpec field, std::size_t n, const std::vector<SparseVec>& rows) {
  SparseEchelon e(field, n, true);
  for (const auto& r : rows) e.insert(r);
  std::vector<SparseBuilder> cols;
  std::vector<std::size_t> free = e.non_pivots();
  std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < free.size(); ++i) slot[free[i]] = i;
  cols.resize(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) cols[i].add(free[i], field.one());
  for (const auto& [pivot, row] : e.rows())
    for (const auto& entry : row)
      if (entry.index != pivot) cols[slot[entry.index]].add(pivot, -entry.value);
  std::vector<SparseVec> out;
  out.reserve(cols.size());
  for (auto& b : cols) out.push_back(b.finish());
  return out;
}

std::optional<Vector> solve_sparse(FieldSpec field, std::size_t n, const std::vector<SparseVec>& rows,
                                   const std::vector<Scalar>& rhs) {
  if (rows.size() != rhs.size()) throw Error(ErrorCode::DimensionMismatch, "solve_sparse: rows != rhs");
  // Augmented column n holds -rhs; a pivot there means 0 = nonzero.
  SparseEchelon e(field, n + 1, true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVec r = rows[i];
    if (!r.empty() && r[r.size() - 1].index >= n)
      throw Error(ErrorCode::DimensionMismatch, "solve_sparse: unknown index out of range");
    r.push_back(n, -field.coerce(rhs[i]));
    e.insert(std::move(r));
  }
  if (e.is_pivot(n)) return std::nullopt;
  Vector x(n, field.zero());
  for (const auto& [pivot, row] : e.rows()) x[pivot] = -field.coerce(row.at(n));
  return x;
}

std::optional<std::vector<Vector>> solve_sparse_many(FieldSpec field, std::size_t n, const std::vector<SparseVec>& rows,
                                                     const std::vector<std::vector<Scalar>>& rhs) {
  const std::size_t k = rhs.size();
  for (const auto& b : rhs)
    if (b.size() != rows.size()) throw Error(ErrorCode::DimensionMismatch, "solve_sparse_many: rows != rhs");
  // Augmented columns n .. n+k-1; any pivot there makes some system inconsistent.
  SparseEchelon e(field, n + k, true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVec r = rows[i];
    if (!r.empty() && r[r.size() - 1].index >= n)
      throw Error(ErrorCode::DimensionMismatch, "solve_sparse_many: unknown index out of range");
    for (std::size_t j = 0; j < k; ++j)
      if (!rhs[j][i].is_zero()) r.push_back(n + j, -field.coerce(rhs[j][i]));
    e.insert(std::move(r));
  }
  std::vector<Vector> x(k, Vector(n, field.zero()));
  for (const auto& [pivot, row] : e.rows()) {
    if (pivot >= n) return std::nullopt;
    for (const auto& entry : row)
      if (entry.index >= n) x[entry.index - n][pivot] = -entry.value;
  }
  return x;
}

Quotient::Quotient(SparseEchelon relations) : relations_(std::move(relations)) {
  if (!relations_.fully_reduced())
    throw Error(ErrorCode::ValidationError, "Quotient needs a fully reduced echelon");
  const std::size_t n = relations_.ambient();
  lift_ = relations_.non_pivots();
  std::vector<std::size_t> qindex(n, static_cast<std::size_t>(-1));
  for (std::size_t q = 0; q < lift_.size(); ++q) qindex[lift_[q]] = q;
  const Scalar one = relations_.field().one();
  proj_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (qindex[i] != static_cast<std::size_t>(-1)) {
      proj_[i] = SparseVec::unit(qindex[i], one);
      continue;
    }
    // e_i = row - (row minus pivot), and row maps to zero in the quotient.
    const SparseVec& row = relations_.rows().at(i);
    SparseVec out;
    for (const auto& e : row) {
      if (e.index == i) continue;
      out.push_back(qindex[e.index], -e.value);
    }
    proj_[i] = std::move(out);
  }
}

SparseVec Quotient::project(const SparseVec& v) const {
  SparseBuilder b;
  for (const auto& e : v) b.add(proj_.at(e.index), e.value);
  return b.finish();
}

SparseVec Quotient::lift(const SparseVec& q) const {
  SparseVec out;
  for (const auto& e : q) out.push_back(lift_.at(e.index), e.value);
  return out;
}

std::vector<SparseVec> intersect(FieldSpec field, const std::vector<SparseVec>& a, const SparseEchelon& b) {
  // Echelonize [a_i mod b | e_i]; rows with no entries in the first block
  // are the combinations of the a_i that lie in span(b).
  const std::size_t n = b.ambient();
  SparseEchelon aug(field, n + a.size(), true);
  for (std::size_t i = 0; i < a.size(); ++i) {
    SparseVec v = b.reduce(a[i]);
    v.push_back(n + i, field.one());
    aug.insert(std::move(v));
  }
  std::vector<SparseVec> out;
  SparseEchelon result(field, n, true);
  for (auto it = aug.rows().lower_bound(n); it != aug.rows().end(); ++it) {
    SparseBuilder comb;
    for (const auto& e : it->second) comb.add(a[e.index - n], e.value);
    SparseVec v = comb.finish();
    if (result.insert(v)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace pbwkit::exactlin
