#include "pbwkit/quadratic/presentation.hpp"

#include <atomic>

#include "pbwkit/error.hpp"

namespace pbwkit::quadratic {

namespace {
std::atomic<std::size_t> g_cap{5000};
}

std::size_t ambient_cap() { return g_cap.load(); }
void set_ambient_cap(std::size_t cap) { g_cap.store(cap); }

void check_cap(std::size_t ambient, const char* what) {
  if (ambient > ambient_cap())
    throw Error(ErrorCode::CapExceeded, std::string(what) + ": ambient dimension " + std::to_string(ambient) +
                                            " exceeds cap " + std::to_string(ambient_cap()));
}

QuadraticPresentation QuadraticPresentation::make(Bimodule m, const std::vector<Vector>& relations) {
  check_cap(m.dim() * m.dim(), "M (x) M");
  QuadraticPresentation p;
  p.m_ = std::move(m);
  p.t2_ = std::make_shared<TensorSpace>(p.m_, p.m_);
  const FieldSpec f = p.field();
  const std::size_t d = p.t2_->dim();
  std::vector<Vector> rel;
  for (const auto& v : relations) {
    if (v.size() != d)
      throw Error(ErrorCode::DimensionMismatch, "relation has length " + std::to_string(v.size()) +
                                                    ", expected dim M (x)_S M = " + std::to_string(d));
    Vector c;
    for (const auto& x : v) c.push_back(f.coerce(x));
    rel.push_back(std::move(c));
  }
  p.r_ = Subspace::span(f, d, rel);
  const Bimodule& t2 = p.t2_->as_bimodule();
  for (std::size_t s = 0; s < p.S().dim(); ++s)
    for (std::size_t j = 0; j < p.r_.dim(); ++j) {
      Vector r = p.r_.basis_vector(j);
      if (!p.r_.contains(t2.left(s).apply(r)))
        throw Error(ErrorCode::RNotSubbimodule, "e" + std::to_string(s) + " * r not in R for r = " +
                                                    exactlin::to_string(r));
      if (!p.r_.contains(t2.right(s).apply(r)))
        throw Error(ErrorCode::RNotSubbimodule, "r * e" + std::to_string(s) + " not in R for r = " +
                                                    exactlin::to_string(r));
    }
  return p;
}

QuadraticPresentation QuadraticPresentation::from_ambient(Bimodule m, const std::vector<Vector>& relations) {
  TensorSpace t2(m, m);
  const FieldSpec f = m.field();
  std::vector<Vector> projected;
  for (const auto& v : relations) {
    if (v.size() != t2.ambient_dim())
      throw Error(ErrorCode::DimensionMismatch, "relation has length " + std::to_string(v.size()) +
                                                    ", expected dim M * dim M = " + std::to_string(t2.ambient_dim()));
    Vector c;
    for (const auto& x : v) c.push_back(f.coerce(x));
    projected.push_back(t2.project_ambient(SparseVec::from_dense(c)).to_dense(f, t2.dim()));
  }
  return make(std::move(m), projected);
}

std::vector<SparseVec> QuadraticPresentation::relation_basis() const {
  std::vector<SparseVec> out;
  for (std::size_t j = 0; j < r_.dim(); ++j) out.push_back(SparseVec::from_dense(r_.basis_vector(j)));
  return out;
}

Bimodule QuadraticPresentation::R_bimodule() const { return t2_->as_bimodule().restrict_to(r_); }

}  // namespace pbwkit::quadratic
