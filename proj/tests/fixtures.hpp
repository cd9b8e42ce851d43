#pragma once

// Small hand-built algebras shared by the unit tests.

#include <vector>

#include "pbwkit/algebra/bimodule.hpp"

namespace fixtures {

using namespace pbwkit;
using namespace pbwkit::algebra;

inline Vector vec(FieldSpec f, std::vector<long long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

inline Matrix mat(FieldSpec f, std::vector<std::vector<long long>> rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = f.from_int(rows[r][c]);
  return m;
}

/// k[e]/(e^2) with basis {1, e}.
inline FiniteAlgebra dual_numbers(FieldSpec f) {
  auto z = vec(f, {0, 0}), one = vec(f, {1, 0}), eps = vec(f, {0, 1});
  return FiniteAlgebra::make(f, 2, {{one, eps}, {eps, z}}, one);
}

/// Upper triangular 2x2 matrices, basis {e11, e12, e22}.
inline FiniteAlgebra upper_triangular(FieldSpec f) {
  auto z = vec(f, {0, 0, 0});
  auto e11 = vec(f, {1, 0, 0}), e12 = vec(f, {0, 1, 0}), e22 = vec(f, {0, 0, 1});
  return FiniteAlgebra::make(f, 3, {{e11, e12, z}, {z, z, e12}, {z, z, e22}}, vec(f, {1, 0, 1}));
}

/// V (x) S for a group algebra S = kG (basis = group elements, table from
/// S's structure constants) with g.(v (x) t) = (A_g v) (x) g t and the regular
/// right action. Index of v (x) t is v * |G| + t.
inline Bimodule group_module(const FiniteAlgebra& s, const std::vector<Matrix>& action) {
  const FieldSpec f = s.field();
  const std::size_t n = s.dim(), dv = action.at(0).rows(), d = dv * n;
  auto group_index = [&](std::size_t i, std::size_t j) {
    const Vector& p = s.product(i, j);
    for (std::size_t k = 0; k < n; ++k)
      if (!p[k].is_zero()) return k;
    return n;
  };
  std::vector<SparseMatrix> left, right;
  for (std::size_t g = 0; g < n; ++g) {
    SparseMatrix l(f, d, d), r(f, d, d);
    for (std::size_t v = 0; v < dv; ++v)
      for (std::size_t t = 0; t < n; ++t) {
        exactlin::SparseBuilder lb;
        for (std::size_t w = 0; w < dv; ++w) lb.add(w * n + group_index(g, t), action[g](w, v));
        l.set_column(v * n + t, lb.finish());
        r.set_column(v * n + t, SparseVec::unit(v * n + group_index(t, g), f.one()));
      }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  return Bimodule::make(s, d, std::move(left), std::move(right));
}

/// Z/2 acting on k^2 by -I.
inline Bimodule sympl_z2_module(FieldSpec f) {
  auto s = FiniteAlgebra::cyclic_group_algebra(f, 2);
  return group_module(s, {Matrix::identity(f, 2), mat(f, {{-1, 0}, {0, -1}})});
}

/// k^n as a bimodule over the ground field.
inline Bimodule vector_space(FieldSpec f, std::size_t n) {
  auto k = FiniteAlgebra::ground(f);
  return Bimodule::make(k, n, {SparseMatrix::identity(f, n)}, {SparseMatrix::identity(f, n)});
}

}  // namespace fixtures
