#include "pbwkit/algebra/tensor.hpp"

#include "pbwkit/error.hpp"

namespace pbwkit::algebra {

using exactlin::SparseBuilder;
using exactlin::SparseEchelon;

TensorSpace::TensorSpace(Bimodule m, Bimodule n) : m_(std::move(m)), n_(std::move(n)) {
  if (m_.algebra() != n_.algebra()) throw Error(ErrorCode::AlgebraMismatch, "tensor_over_S: factors over different algebras");
  const FieldSpec f = m_.field();
  const std::size_t dm = m_.dim(), dn = n_.dim(), ds = m_.algebra().dim();
  SparseEchelon rel(f, dm * dn, true);
  for (std::size_t a = 0; a < dm; ++a)
    for (std::size_t s = 0; s < ds; ++s) {
      const SparseVec& as = m_.right(s).column(a);
      for (std::size_t b = 0; b < dn; ++b) {
        const SparseVec& sb = n_.left(s).column(b);
        SparseBuilder v;
        for (const auto& e : as) v.add(e.index * dn + b, e.value);
        for (const auto& e : sb) v.add(a * dn + e.index, -e.value);
        rel.insert(v.finish());
      }
    }
  quotient_ = std::make_shared<exactlin::Quotient>(std::move(rel));

  const std::size_t q = quotient_->dim();
  std::vector<SparseMatrix> left(ds, SparseMatrix(f, q, q)), right(ds, SparseMatrix(f, q, q));
  for (std::size_t s = 0; s < ds; ++s)
    for (std::size_t c = 0; c < q; ++c) {
      auto [a, b] = lift_pair(c);
      SparseBuilder l, r;
      for (const auto& e : m_.left(s).column(a)) l.add(project_pair(e.index, b), e.value);
      for (const auto& e : n_.right(s).column(b)) r.add(project_pair(a, e.index), e.value);
      left[s].set_column(c, l.finish());
      right[s].set_column(c, r.finish());
    }
  bimodule_ = std::make_shared<Bimodule>(Bimodule::trusted(m_.algebra(), q, std::move(left), std::move(right)));
}

SparseVec TensorSpace::project(const SparseVec& x, const SparseVec& y) const {
  SparseBuilder out;
  for (const auto& a : x)
    for (const auto& b : y) out.add(project_pair(a.index, b.index), a.value * b.value);
  return out.finish();
}

Matrix TensorSpace::projection() const {
  const FieldSpec f = m_.field();
  Matrix p(f, dim(), ambient_dim());
  for (std::size_t i = 0; i < ambient_dim(); ++i)
    for (const auto& e : quotient_->project_index(i)) p(e.index, i) = e.value;
  return p;
}

Matrix TensorSpace::section() const {
  const FieldSpec f = m_.field();
  Matrix s(f, ambient_dim(), dim());
  for (std::size_t q = 0; q < dim(); ++q) s(quotient_->lift_index(q), q) = f.one();
  return s;
}

exactlin::Subspace TensorSpace::relations() const {
  const FieldSpec f = m_.field();
  std::vector<Vector> rows;
  for (const auto& [pivot, row] : quotient_->relations().rows()) rows.push_back(row.to_dense(f, ambient_dim()));
  return exactlin::Subspace::span(f, ambient_dim(), rows);
}

TensorSpace tensor_over_S(const Bimodule& m, const Bimodule& n) { return TensorSpace(m, n); }

}  // namespace pbwkit::algebra
