#include "pbwkit/exactlin/matrix.hpp"

#include "pbwkit/error.hpp"

namespace pbwkit::exactlin {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::DimensionMismatch, what);
}

}  // namespace

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  require(v.size() == cols_, "row length " + std::to_string(v.size()) + " != " + std::to_string(cols_));
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = field_.coerce(v[c]);
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  require(v.size() == rows_, "column length " + std::to_string(v.size()) + " != " + std::to_string(rows_));
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = field_.coerce(v[r]);
}

Vector Matrix::apply(const Vector& v) const {
  require(v.size() == cols_, "apply: vector length " + std::to_string(v.size()) + " != " + std::to_string(cols_));
  Vector out(rows_, field_.zero());
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, "product " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                                std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "sum of differently shaped matrices");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "difference of differently shaped matrices");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

Matrix Matrix::hcat(const Matrix& o) const {
  require(rows_ == o.rows_, "hcat row mismatch");
  Matrix out(field_, rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < o.cols_; ++c) out(r, cols_ + c) = o(r, c);
  }
  return out;
}

Matrix Matrix::vcat(const Matrix& o) const {
  require(cols_ == o.cols_, "vcat column mismatch");
  Matrix out(field_, rows_ + o.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
  for (std::size_t r = 0; r < o.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(rows_ + r, c) = o(r, c);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += " ";
      s += (*this)(r, c).to_string();
    }
  }
  return s + "]";
}

Vector zero_vector(FieldSpec field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i) {
  Vector v(n, field.zero());
  v.at(i) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "vector sum length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "vector difference length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= c;
  return out;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

}  // namespace pbwkit::exactlin
