#include "pbwkit/pbw/deformation.hpp"

#include "pbwkit/error.hpp"
#include "pbwkit/exactlin/linalg.hpp"

namespace pbwkit::pbw {

namespace {

void check_shape(const QuadraticPresentation& p, const Matrix& phi, const Matrix& theta, std::size_t n) {
  if (phi.rows() != p.M().dim() || phi.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "phi must be " + std::to_string(p.M().dim()) + " x " + std::to_string(n) +
                                                  ", got " + std::to_string(phi.rows()) + " x " + std::to_string(phi.cols()));
  if (theta.rows() != p.S().dim() || theta.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "theta must be " + std::to_string(p.S().dim()) + " x " +
                                                  std::to_string(n) + ", got " + std::to_string(theta.rows()) + " x " +
                                                  std::to_string(theta.cols()));
}

}  // namespace

DeformationData DeformationData::make(QuadraticPresentation pres, Matrix phi, Matrix theta) {
  check_shape(pres, phi, theta, pres.R().dim());
  return {std::move(pres), std::move(phi), std::move(theta), std::nullopt};
}

DeformationData DeformationData::theta_only(QuadraticPresentation pres, Matrix theta) {
  Matrix phi(pres.field(), pres.M().dim(), pres.R().dim());
  return make(std::move(pres), std::move(phi), std::move(theta));
}

DeformationData DeformationData::on_basis(QuadraticPresentation pres, const std::vector<SparseVec>& basis,
                                          const Matrix& phi, const Matrix& theta) {
  const FieldSpec f = pres.field();
  const std::size_t n = pres.R().dim(), amb = pres.T2().dim();
  check_shape(pres, phi, theta, basis.size());
  if (basis.size() != n)
    throw Error(ErrorCode::ValidationError, "relation list has " + std::to_string(basis.size()) +
                                                " vectors but dim R = " + std::to_string(n));
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(b.to_dense(f, amb));
  Matrix l = Matrix::from_columns(f, amb, cols);
  if (exactlin::rank(l) != n) throw Error(ErrorCode::ValidationError, "relation list is linearly dependent");
  // Column j of c: coordinates of the j-th relation-basis vector in the list.
  Matrix c(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto x = exactlin::solve_affine(l, pres.R().basis_vector(j));
    if (!x) throw Error(ErrorCode::ValidationError, "relation list does not span R");
    c.set_column(j, *x);
  }
  return make(std::move(pres), phi * c, theta * c);
}

bool DeformationData::homogeneous() const { return phi.is_zero() && theta.is_zero(); }

DeformationData smash_deformation(const Braiding& psi, const std::vector<Vector>& relations, const Matrix& phi,
                                  const Matrix& theta) {
  const FieldSpec f = psi.field();
  const FiniteAlgebra& s = psi.S();
  const std::size_t ds = s.dim(), dm = psi.dim_v() * ds;
  if (phi.rows() != dm || phi.cols() != relations.size() || theta.rows() != ds || theta.cols() != relations.size())
    throw Error(ErrorCode::DimensionMismatch, "phi: R -> V (x) S and theta: R -> S on the relation list");
  QuadraticPresentation pres = entwine::smash_presentation(psi, relations);
  std::vector<SparseVec> basis;
  for (const auto& v : entwine::smash_relation_ambient(psi, relations))
    basis.push_back(pres.T2().project_ambient(SparseVec::from_dense(v)));
  Matrix pb(f, dm, basis.size()), tb(f, ds, basis.size());
  for (std::size_t j = 0; j < relations.size(); ++j)
    for (std::size_t t = 0; t < ds; ++t) {
      const std::size_t col = j * ds + t;
      pb.set_column(col, pres.M().right(t).apply(phi.column(j)));
      tb.set_column(col, s.multiply(theta.column(j), exactlin::unit_vector(f, ds, t)));
    }
  DeformationData d = DeformationData::on_basis(std::move(pres), basis, pb, tb);
  d.smash = SmashShape{psi, relations, phi, theta};
  return d;
}

VerdictReport check_equivariance(const SmashShape& shape) {
  VerdictReport rep;
  rep.title = "equivariance of phi and theta";
  const Braiding& psi = shape.psi;
  const FieldSpec f = psi.field();
  const FiniteAlgebra& s = psi.S();
  const std::size_t ds = s.dim(), dv = psi.dim_v(), n = shape.relations.size();
  auto t = entwine::extend_to_tensor(psi, 2);
  Bimodule m = entwine::bimodule_from_braiding(psi);
  std::vector<Vector> cols;
  for (const auto& r : shape.relations) {
    Vector v(dv * dv, f.zero());
    for (std::size_t i = 0; i < r.size() && i < v.size(); ++i) v[i] = f.coerce(r[i]);
    cols.push_back(v);
  }
  Matrix l = Matrix::from_columns(f, dv * dv, cols);
  std::string wphi, wtheta, wstable;
  for (std::size_t si = 0; si < ds; ++si)
    for (std::size_t j = 0; j < n; ++j) {
      // Psi_T(s (x) r_j) grouped by the S-factor.
      std::vector<Vector> parts(ds, Vector(dv * dv, f.zero()));
      for (std::size_t w = 0; w < dv * dv; ++w) {
        if (cols[j][w].is_zero()) continue;
        for (const auto& e : t.apply(2, si, w)) parts[e.index % ds][e.index / ds] += cols[j][w] * e.value;
      }
      Vector lphi(m.dim(), f.zero()), ltheta(ds, f.zero());
      bool stable = true;
      for (std::size_t sp = 0; sp < ds; ++sp) {
        if (exactlin::is_zero(parts[sp])) continue;
        auto c = exactlin::solve_affine(l, parts[sp]);
        if (!c) {
          stable = false;
          break;
        }
        lphi = exactlin::add(lphi, m.right(sp).apply(shape.phi.apply(*c)));
        ltheta = exactlin::add(ltheta, s.multiply(shape.theta.apply(*c), exactlin::unit_vector(f, ds, sp)));
      }
      const std::string at = "s=e" + std::to_string(si) + ", r=r" + std::to_string(j);
      if (!stable) {
        if (wstable.empty()) wstable = at;
        continue;
      }
      Vector rphi = m.left(si).apply(shape.phi.column(j));
      Vector rtheta = s.multiply(exactlin::unit_vector(f, ds, si), shape.theta.column(j));
      if (lphi != rphi && wphi.empty())
        wphi = at + ": phi(r^Psi) s_Psi = " + exactlin::to_string(lphi) + ", s phi(r) = " + exactlin::to_string(rphi);
      if (ltheta != rtheta && wtheta.empty())
        wtheta = at + ": theta(r^Psi) s_Psi = " + exactlin::to_string(ltheta) + ", s theta(r) = " +
                 exactlin::to_string(rtheta);
    }
  rep.add("relations stable", wstable.empty(), "Psi_T(S (x) R) in R (x) S", wstable);
  rep.add("phi equivariant", wphi.empty(), {}, wphi);
  rep.add("theta equivariant", wtheta.empty(), {}, wtheta);
  return rep;
}

RelationActions relation_actions(const QuadraticPresentation& pres) {
  Bimodule r = pres.R_bimodule();
  RelationActions out;
  for (std::size_t s = 0; s < pres.S().dim(); ++s) {
    out.left.push_back(r.left(s).to_dense());
    out.right.push_back(r.right(s).to_dense());
  }
  return out;
}

}  // namespace pbwkit::pbw
