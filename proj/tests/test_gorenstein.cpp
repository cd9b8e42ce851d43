#include <doctest.h>

#include "deformations.hpp"
#include "pbwkit/error.hpp"
#include "pbwkit/gorenstein/gorenstein.hpp"
#include "pbwkit/pbw/oracle.hpp"
#include "pbwkit/pbw/theorems.hpp"
#include "pbwkit/quadratic/koszul.hpp"

using namespace fixtures;
using namespace pbwkit::gorenstein;
using pbwkit::Error;
using pbwkit::ErrorCode;
using pbwkit::Status;

namespace {

// Z/3 acting on GF(7)^2 by x -> 2x, y -> y: determinant 2, so R is a twisted bimodule.
QuadraticPresentation z3_twisted() {
  const FieldSpec f = FieldSpec::prime(7);
  auto s = FiniteAlgebra::cyclic_group_algebra(f, 3);
  auto psi = Braiding::group_action(s, {Matrix::identity(f, 2), mat(f, {{2, 0}, {0, 1}}), mat(f, {{4, 0}, {0, 1}})});
  return pbwkit::entwine::smash_presentation(psi, commutators(f, 2));
}

// sum_i (-1)^i dim Hom_S(K_i, B_{i+e}) computed from the hom spaces alone.
long long euler(const QuadraticPresentation& pres, int i_max, int e) {
  quadratic::TensorPowers t(pres.M(), i_max);
  auto k = quadratic::koszul_generators(t, pres, i_max);
  quadratic::GradedAlgebra b(pres, i_max + e + 1);
  long long out = 0;
  for (int i = 0; i <= i_max; ++i) {
    const int j = i + e;
    if (j < 0 || k.dim(i) == 0) continue;
    auto h = pbwkit::algebra::hom_right_S(t.bimodule(i).restrict_to(k.K[i]), b.bimodule(j));
    out += (i % 2 ? -1 : 1) * static_cast<long long>(h.size());
  }
  return out;
}

long long euler(const ExtTable& t, int e) {
  long long out = 0;
  for (int i = 0; i <= t.i_max; ++i) out += (i % 2 ? -1 : 1) * static_cast<long long>(t.at(i, e));
  return out;
}

bool sigma_identities(const QuadraticPresentation& pres, const SigmaData& sd) {
  const auto& s = pres.S();
  const auto rb = pres.R_bimodule();
  for (std::size_t t = 0; t < s.dim(); ++t)
    if (rb.left(t).apply(sd.r0) != rb.right_by(sd.sigma.column(t)).apply(sd.r0)) return false;
  return true;
}

}  // namespace

TEST_CASE("selfinjectivity") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(check_selfinjective(FiniteAlgebra::cyclic_group_algebra(q, 3)));
  CHECK(check_selfinjective(dual_numbers(q)));
  CHECK_FALSE(check_selfinjective(upper_triangular(q)));
  CHECK(check_selfinjective(FiniteAlgebra::ground(q)));
}

TEST_CASE("Ext tables from the dual Koszul complex") {
  const FieldSpec q = FieldSpec::rationals();
  SUBCASE("k[x,y]") {
    auto t = ext_via_koszul(polynomial(q, 2), 3, -4, 2);
    for (int i = 0; i <= 3; ++i)
      for (int e = -4; e <= 2; ++e) CHECK(t.at(i, e) == (i == 2 && e == -2 ? 1u : 0u));
  }
  SUBCASE("k[x,y] # kZ/2") {
    auto pres = sympl_z2(q);
    auto t = ext_via_koszul(pres, 3, -4, 2);
    for (int i = 0; i <= 3; ++i)
      for (int e = -4; e <= 2; ++e) CHECK(t.at(i, e) == (i == 2 && e == -2 ? 2u : 0u));
    for (int e = -3; e <= 0; ++e) CHECK(euler(t, e) == euler(pres, 3, e));
  }
  SUBCASE("tensor algebra") {
    auto pres = QuadraticPresentation::from_ambient(sympl_z2_module(q), {});
    auto t = ext_via_koszul(pres, 3, -3, 2);
    for (int i = 2; i <= 3; ++i)
      for (int e = -3; e <= 2; ++e) CHECK(t.at(i, e) == 0u);
    CHECK(euler(t, -1) == euler(pres, 3, -1));
  }
  SUBCASE("k[x,y,z] has Ext^3 in degree -3") {
    auto t = ext_via_koszul(polynomial(q, 3), 4, -4, 1);
    CHECK(t.at(3, -3) == 1u);
    CHECK(t.at(2, -2) == 0u);
  }
}

TEST_CASE("Gorenstein certificate") {
  const FieldSpec q = FieldSpec::rationals();
  auto pres = sympl_z2(q);
  auto good = check_gorenstein(pres, 2, 2, -4, 4);
  CHECK(good.passed());
  CHECK(good.selfinjective);
  CHECK(good.report.passed("right: K_3 = 0"));
  CHECK(good.report.passed("left: Ext^2 iso D(S)"));
  CHECK(good.ext_left.at(2, -2) == 2u);

  auto shifted = check_gorenstein(pres, 2, 3, -4, 4);
  CHECK(shifted.report.overall() == Status::Fail);
  const auto* c = shifted.report.find("right: Ext^2 dims match D(S)(3)");
  REQUIRE(c != nullptr);
  CHECK(c->witness.find("degree -3") != std::string::npos);

  CHECK(check_gorenstein(polynomial(q, 2), 2, 2, -4, 4).passed());
  CHECK(check_gorenstein(z3_twisted(), 2, 2, -3, 2).passed());

  auto wrong_d = check_gorenstein(polynomial(q, 3), 2, 2, -3, 2);
  CHECK(wrong_d.report.overall() == Status::Fail);
  CHECK(wrong_d.report.find("right: K_3 = 0")->status == Status::Fail);

  auto narrow = check_gorenstein(pres, 2, 2, -1, 1);
  CHECK(narrow.report.find("right: Ext^2 iso D(S)")->status == Status::Undecided);
}

TEST_CASE("sigma extraction") {
  const FieldSpec q = FieldSpec::rationals();
  SUBCASE("k[x,y] # kZ/2") {
    auto pres = sympl_z2(q);
    auto sd = extract_sigma(pres);
    CHECK(sd.sigma == Matrix::identity(q, 2));
    CHECK(sd.e_space.dim() == 2u);
    CHECK(sigma_identities(pres, sd));
  }
  SUBCASE("S = k") {
    auto sd = extract_sigma(polynomial(q, 2));
    CHECK(sd.sigma == Matrix::identity(q, 1));
    CHECK(sd.e_space.dim() == 1u);
  }
  SUBCASE("twisted Z/3") {
    auto pres = z3_twisted();
    auto sd = extract_sigma(pres, 5);
    const FieldSpec f = pres.field();
    CHECK(sd.sigma == mat(f, {{1, 0, 0}, {0, 2, 0}, {0, 0, 4}}));
    CHECK(sigma_identities(pres, sd));
    CHECK(sd.e_space.dim() == 0u);
    // sigma is multiplicative: sigma(g) sigma(g) = sigma(g^2)
    const auto& s = pres.S();
    CHECK(s.multiply(sd.sigma.column(1), sd.sigma.column(1)) == sd.sigma.column(2));
  }
  SUBCASE("dim R != dim S") {
    CHECK_THROWS_AS(extract_sigma(polynomial(q, 3)), Error);
    try {
      extract_sigma(polynomial(q, 3));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DimMismatch);
    }
  }
}

TEST_CASE("U_e deformations") {
  const FieldSpec q = FieldSpec::rationals();
  auto pres = sympl_z2(q);
  auto sd = extract_sigma(pres);
  for (const auto& e : {vec(q, {0, 0}), vec(q, {1, 1}), vec(q, {2, -1})}) {
    auto u = build_U_e(pres, sd, e);
    auto fd = pbwkit::pbw::oracle_filtered_dims(u.data, 4, 6);
    CHECK(u.oracle.overall() == Status::Pass);
    CHECK(u.theorem_a.find("predicted_pbw")->status == Status::Pass);
    CHECK(fd.graded == std::vector<std::size_t>{2, 4, 6, 8, 10});
  }

  SUBCASE("e = 1 over GF(2)") {
    const FieldSpec f2 = FieldSpec::prime(2);
    auto p2 = sympl_z2(f2);
    auto s2 = extract_sigma(p2);
    auto u = build_U_e(p2, s2, vec(f2, {1, 0}));
    CHECK(u.oracle.overall() == Status::Pass);
    CHECK(u.theorem_a.overall() == Status::Pass);
  }

  SUBCASE("theta is a bimodule map exactly on e_space") {
    auto tw = z3_twisted();
    auto st = extract_sigma(tw);
    const FieldSpec f = tw.field();
    CHECK_THROWS_AS(build_U_e(tw, st, vec(f, {1, 0, 0}), 3, 5), Error);
    auto bad = pbwkit::pbw::check_theorem_a(theta_from_e(tw, st, vec(f, {1, 0, 0})));
    const auto* c = bad.find("theta_bimodule");
    REQUIRE(c != nullptr);
    CHECK(c->status == Status::Fail);
    CHECK_FALSE(c->witness.empty());
    auto zero = pbwkit::pbw::check_theorem_a(theta_from_e(tw, st, vec(f, {0, 0, 0})));
    CHECK(zero.passed("theta_bimodule"));
    auto in = pbwkit::pbw::check_theorem_a(theta_from_e(pres, sd, vec(q, {3, 1})));
    CHECK(in.passed("theta_bimodule"));
  }
}
