#include "pbwkit/quadratic/graded.hpp"

#include "pbwkit/error.hpp"

namespace pbwkit::quadratic {

GradedAlgebra::GradedAlgebra(QuadraticPresentation pres, int n_max) : pres_(std::move(pres)), n_max_(n_max) {
  t_ = std::make_shared<TensorPowers>(pres_.M(), n_max);
  const FieldSpec f = pres_.field();
  const TensorPowers& t = *t_;
  const auto rel = pres_.relation_basis();
  std::vector<SparseEchelon> ideals;
  for (int n = 0; n <= n_max; ++n) {
    SparseEchelon ideal(f, t.dim(n), true);
    if (n == 2) {
      for (const auto& r : rel) ideal.insert(r);
    } else if (n > 2) {
      for (const auto& [pivot, row] : ideals[n - 1].rows())
        for (std::size_t l = 0; l < t.M().dim(); ++l) ideal.insert(t.append(n - 1, row, l));
      for (std::size_t x = 0; x < t.dim(n - 2); ++x)
        for (const auto& r : rel) ideal.insert(t.multiply(n - 2, SparseVec::unit(x, f.one()), 2, r));
    }
    ideals.push_back(ideal);
    pieces_.emplace_back(std::move(ideal));
  }
  const FiniteAlgebra& s = pres_.S();
  for (int n = 0; n <= n_max; ++n) {
    const auto& q = pieces_[n];
    const Bimodule& tn = t.bimodule(n);
    std::vector<SparseMatrix> left(s.dim(), SparseMatrix(f, q.dim(), q.dim())), right = left;
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t c = 0; c < q.dim(); ++c) {
        left[i].set_column(c, q.project(tn.left(i).column(q.lift_index(c))));
        right[i].set_column(c, q.project(tn.right(i).column(q.lift_index(c))));
      }
    bimodules_.push_back(Bimodule::trusted(s, q.dim(), std::move(left), std::move(right)));
  }
}

SparseVec GradedAlgebra::multiply(int i, const SparseVec& x, int j, const SparseVec& y) const {
  if (i + j > n_max_) throw Error(ErrorCode::CapExceeded, "product beyond computed degree");
  return project(i + j, t_->multiply(i, lift(i, x), j, lift(j, y)));
}

Matrix GradedAlgebra::multiplication_matrix(int i, int j) const {
  const FieldSpec f = pres_.field();
  const std::size_t di = dim(i), dj = dim(j);
  Matrix out(f, dim(i + j), di * dj);
  for (std::size_t a = 0; a < di; ++a)
    for (std::size_t b = 0; b < dj; ++b)
      for (const auto& e : multiply(i, SparseVec::unit(a, f.one()), j, SparseVec::unit(b, f.one())))
        out(e.index, a * dj + b) = e.value;
  return out;
}

GradedAlgebra graded_pieces(const QuadraticPresentation& pres, int n_max) { return GradedAlgebra(pres, n_max); }

}  // namespace pbwkit::quadratic
