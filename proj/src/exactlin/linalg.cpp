#include "pbwkit/exactlin/linalg.hpp"

#include "pbwkit/error.hpp"
#include "pbwkit/exactlin/kernels.hpp"

namespace pbwkit::exactlin {

namespace {

RrefResult rref_prime(const Matrix& m) {
  const std::uint32_t p = m.field().p;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint32_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = static_cast<std::uint32_t>(m(r, c).small_integer());

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t sel = lead;
    while (sel < rows && a[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != lead)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[sel * cols + k], a[lead * cols + k]);
    std::uint32_t* prow = &a[lead * cols];
    std::uint32_t inv = static_cast<std::uint32_t>(Scalar::residue(prow[c], p).inverse().small_integer());
    kernels::scale_mod(prow + c, inv, p, cols - c);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      std::uint32_t f = a[r * cols + c];
      if (f == 0) continue;
      kernels::axpy_mod(&a[r * cols + c], prow + c, p - f, p, cols - c);
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix out(m.field(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = Scalar::residue(a[r * cols + c], p);
  return {std::move(out), std::move(pivots)};
}

void check_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::AmbientMismatch,
                std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()));
}

}  // namespace

RrefResult rref_generic(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t sel = lead;
    while (sel < rows && a(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != lead)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(sel, k), a(lead, k));
    Scalar inv = a(lead, c).inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!a(lead, k).is_zero()) a(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      Scalar f = a(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!a(lead, k).is_zero()) a(r, k) -= f * a(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(a), std::move(pivots)};
}

RrefResult rref(const Matrix& m) {
  if (m.field().is_prime_field()) return rref_prime(m);
  return rref_generic(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Subspace kernel(const Matrix& m) {
  FieldSpec f = m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), basis);
}

Subspace left_kernel(const Matrix& m) { return kernel(m.transposed()); }

std::optional<Vector> solve_affine(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "rhs length " + std::to_string(rhs.size()) + " != " +
                                                  std::to_string(m.rows()));
  Matrix b(m.field(), m.rows(), 1);
  b.set_column(0, rhs);
  auto x = solve_affine(m, b);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<Matrix> solve_affine(const Matrix& m, const Matrix& rhs) {
  if (rhs.rows() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs rows != matrix rows");
  FieldSpec f = m.field();
  RrefResult r = rref(m.hcat(rhs));
  const std::size_t n = m.cols();
  Matrix x(f, n, rhs.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= n) return std::nullopt;  // pivot in the augmented block
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(r.pivots[i], c) = r.reduced(i, n + c);
  }
  return x;
}

Vector random_vector(FieldSpec field, std::size_t n, std::mt19937_64& rng, int range) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(field.random(rng, range));
  return v;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  RrefResult r = rref(m.hcat(Matrix::identity(m.field(), m.rows())));
  if (r.rank() < m.rows() || (m.rows() > 0 && r.pivots[m.rows() - 1] >= m.cols())) return std::nullopt;
  return r.reduced.block(0, m.cols(), m.rows(), m.rows());
}

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim)
    : field_(field), ambient_(ambient_dim), basis_(field, 0, ambient_dim) {}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (vectors[i].size() != ambient_dim)
      throw Error(ErrorCode::AmbientMismatch, "vector " + std::to_string(i) + " has length " +
                                                  std::to_string(vectors[i].size()) + ", ambient " +
                                                  std::to_string(ambient_dim));
  return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& rows) {
  RrefResult r = rref(rows);
  Subspace s(rows.field(), rows.cols());
  s.basis_ = r.reduced.block(0, 0, r.rank(), rows.cols());
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  return row_space(Matrix::identity(field, ambient_dim));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_)
    throw Error(ErrorCode::AmbientMismatch, "vector length " + std::to_string(v.size()) + ", ambient " +
                                                std::to_string(ambient_));
  Vector w = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = w[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t k = pivots_[i]; k < ambient_; ++k)
      if (!basis_(i, k).is_zero()) w[k] -= c * basis_(i, k);
  }
  return w;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_ambient(*this, other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c;
  c.reserve(dim());
  for (auto p : pivots_) c.push_back(field_.coerce(v[p]));
  return c;
}

std::vector<std::size_t> Subspace::complement() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!is_pivot[i]) out.push_back(i);
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.basis_ == b.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  return Subspace::row_space(a.basis().vcat(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  FieldSpec f = a.field();
  // alpha . (rows of a) lies in b iff alpha . (rows of a reduced modulo b) = 0.
  Matrix reduced(f, a.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) reduced.set_row(i, b.reduce(a.basis_vector(i)));
  Subspace coeffs = left_kernel(reduced);
  if (coeffs.dim() == 0) return Subspace(f, a.ambient_dim());
  return Subspace::row_space(coeffs.basis() * a.basis());
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transposed()); }

Subspace image(const Matrix& m, const Subspace& source) {
  if (source.ambient_dim() != m.cols()) throw Error(ErrorCode::AmbientMismatch, "image: source ambient != cols");
  return Subspace::row_space((m * source.basis().transposed()).transposed());
}

}  // namespace pbwkit::exactlin
