#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gcx/structures.hpp"
#include "helpers.hpp"

using namespace gcx::structures;
using namespace gcx_test;
using gcx::courant::courant_bracket;
using gcx::courant::GenVector;
using gcx::courant::pairing;
using gcx::courant::SubbundleSpan;
using gcx::exactnum::GaussRational;
using gcx::exactnum::gauss;
using gcx::exactnum::rat;
using gcx::multilinear::Endo;
using gcx::multilinear::KForm;
using gcx::multilinear::KVector;
using gcx::multilinear::wedge;

namespace {

const GaussRational I = GaussRational::i();
const GaussRational ONE = GaussRational(1);
std::mt19937 rng(5150001);

Endo su2_normal_phi() {
  return Endo::rank_one(KVector::basis(3, 1), KForm::basis(3, 0)) -
         Endo::rank_one(KVector::basis(3, 0), KForm::basis(3, 1));
}

Gacs su2_normal() {
  auto a = su2();
  return from_almost_contact(a, KVector::basis(3, 2), KForm::basis(3, 2), su2_normal_phi());
}

Gacs su2_contact() { return from_contact(su2(), KForm::basis(3, 2)); }

Gacs h3_cosym(long anum, long aden, long bnum, long bden) {
  auto h = h3();
  KForm theta = wedge(KForm::basis(3, 1), KForm::basis(3, 2)) +
                gauss(anum, aden) * wedge(KForm::basis(3, 0), KForm::basis(3, 1)) +
                gauss(bnum, bden) * wedge(KForm::basis(3, 0), KForm::basis(3, 2));
  return from_cosymplectic(h, KForm::basis(3, 0), theta).j;
}

// J_t family tensors on h3 for t = r(c + i s), c^2 + s^2 = 1
Gacs h3_family(const GaussRational& r, const GaussRational& c, const GaussRational& s) {
  auto h = h3();
  GaussRational one_minus_r2 = ONE - r * r;
  GaussRational u = GaussRational(2) * r * c / one_minus_r2;
  GaussRational A = (r * r - GaussRational(2) * r * s + ONE) / one_minus_r2;
  GaussRational B = (r * r + GaussRational(2) * r * s + ONE) / one_minus_r2;
  Endo phi = u * (Endo::rank_one(KVector::basis(3, 1), KForm::basis(3, 1)) +
                  Endo::rank_one(KVector::basis(3, 2), KForm::basis(3, 2)));
  KForm theta = A * wedge(KForm::basis(3, 1), KForm::basis(3, 2));
  KVector pi = B * wedge(KVector::basis(3, 1), KVector::basis(3, 2));
  return Gacs{h, KVector::basis(3, 0), KForm::basis(3, 0), pi, theta, phi};
}

DeformParam h3_gamma() {
  auto h = h3();
  GenVector f1 = gv(h, {{2, I}}, {{1, ONE}});   // a2 + i X3
  GenVector f2 = gv(h, {{1, -I}}, {{2, ONE}});  // a3 - i X2
  return DeformParam{gcx::courant::BiVec::decomposable(f1, f2)};
}

}  // namespace

TEST_CASE("validate_gacs: su(2) normal data is valid") {
  auto a = su2();
  Gacs j{a, KVector::basis(3, 2), KForm::basis(3, 2), KVector(3, 2), KForm(3, 2),
         su2_normal_phi()};
  CHECK(validate_gacs(j).empty());
}

TEST_CASE("validate_gacs: degenerate cases") {
  // dimension 1: phi = pi = theta = 0 with eta(F) = 1 is valid
  auto line = std::make_shared<gcx::liealg::LieAlgebra>(gcx::liealg::LieAlgebra::abelian(1));
  Gacs j1{line, KVector::basis(1, 0), KForm::basis(1, 0), KVector(1, 2), KForm(1, 2),
          Endo::zero(1)};
  CHECK(validate_gacs(j1).empty());

  // dimension 3 with all tensors zero: Relation2 fails
  auto a = su2();
  Gacs j3{a, KVector::basis(3, 2), KForm::basis(3, 2), KVector(3, 2), KForm(3, 2), Endo::zero(3)};
  auto violations = validate_gacs(j3);
  CHECK(!violations.empty());
  bool has_r2 = false;
  for (const auto& v : violations)
    if (v.relation == "Relation2") has_r2 = true;
  CHECK(has_r2);

  // even dimension rejected
  auto k4 = kod4();
  Gacs j4{k4, KVector::basis(4, 0), KForm::basis(4, 0), KVector(4, 2), KForm(4, 2), Endo::zero(4)};
  bool has_odd = false;
  for (const auto& v : validate_gacs(j4))
    if (v.relation == "OddDimension") has_odd = true;
  CHECK(has_odd);
}

TEST_CASE("validate_gacs: h3 family at sample parameters") {
  // oracle: direct matrix computation of Phi^2 against -I + F (.) eta
  Gacs j = h3_family(gauss(1, 2), gauss(3, 5), gauss(4, 5));
  CHECK(validate_gacs(j).empty());
  auto big = j.big_phi();
  auto id6 = gcx::exactnum::Matrix::identity(6);
  gcx::exactnum::Matrix fe(6, 6);
  fe.at(0, 0) = ONE;   // F (x) eta = X1 (x) a1
  fe.at(3, 3) = ONE;   // eta (x) F
  CHECK(big * big == GaussRational(-1) * id6 + fe);

  CHECK(validate_gacs(h3_family(GaussRational(2), gauss(5, 13), gauss(12, 13))).empty());
  CHECK(validate_gacs(h3_family(gauss(1, 3), gauss(-3, 5), gauss(4, 5))).empty());
}

TEST_CASE("eigenbundles: su(2) normal") {
  Gacs j = su2_normal();
  EigenData eig = eigenbundles(j);
  auto a = j.algebra;
  SubbundleSpan expected(
      a, {gv(a, {{0, ONE}, {1, -I}}, {}), gv(a, {}, {{0, ONE}, {1, -I}})});
  CHECK(span_equal(eig.E10, expected));
  CHECK(span_equal(eig.E01, expected.conj()));
  CHECK(eig.E10.rank() == 2);
  // L and L* as in the structure equations
  SubbundleSpan expL(a, {gv(a, {{2, ONE}}, {}), gv(a, {{0, ONE}, {1, -I}}, {}),
                         gv(a, {}, {{0, ONE}, {1, -I}})});
  CHECK(span_equal(eig.L, expL));
}

TEST_CASE("eigenbundles: h3 cosymplectic at a=b=0") {
  Gacs j = h3_cosym(0, 1, 0, 1);
  EigenData eig = eigenbundles(j);
  auto h = j.algebra;
  SubbundleSpan expL(h, {gv(h, {{0, ONE}}, {}), gv(h, {{1, ONE}}, {{2, -I}}),
                         gv(h, {{2, ONE}}, {{1, I}})});
  CHECK(span_equal(eig.L, expL));
  SubbundleSpan expLs(h, {gv(h, {}, {{0, ONE}}), gv(h, {{1, ONE}}, {{2, I}}),
                          gv(h, {{2, ONE}}, {{1, -I}})});
  CHECK(span_equal(eig.Lstar, expLs));
}

TEST_CASE("eigenbundles: conjugation symmetry across catalog structures") {
  std::vector<Gacs> all = {su2_normal(), su2_contact(), h3_cosym(0, 1, 0, 1),
                           h3_cosym(1, 1, 0, 1), h3_cosym(2, 1, -3, 1),
                           h3_family(gauss(1, 2), gauss(3, 5), gauss(4, 5))};
  for (const auto& j : all) {
    EigenData eig = eigenbundles(j);
    CHECK(span_equal(eig.E10.conj(), eig.E01));
    CHECK(span_equal(eig.L.conj(), eig.Lbar));
    CHECK(span_equal(eig.Lstar.conj(), eig.Lbarstar));
    // the four pieces assemble the whole space
    std::vector<GenVector> all_gens = eig.l_basis;
    for (const auto& g : eig.lstar_basis) all_gens.push_back(g);
    CHECK(SubbundleSpan(j.algebra, all_gens).rank() == 2 * j.algebra->dim());
    // isotropy of the six spans
    CHECK(gcx::courant::is_isotropic(eig.E10));
    CHECK(gcx::courant::is_isotropic(eig.E01));
    CHECK(gcx::courant::is_isotropic(eig.L));
    CHECK(gcx::courant::is_isotropic(eig.Lbar));
    CHECK(gcx::courant::is_isotropic(eig.Lstar));
    CHECK(gcx::courant::is_isotropic(eig.Lbarstar));
  }
}

TEST_CASE("classify: su(2) contact is generalized contact but not strong") {
  Classification c = classify(su2_contact());
  CHECK(c.level == Level::GeneralizedContact);
  CHECK(!c.llstar_bialgebroid);
  CHECK(c.obstruction_nonzero);
  CHECK(!c.e_pair_bialgebroid);
}

TEST_CASE("classify: h3 cosymplectic is strong with both bialgebroid flags") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 0}, {1, 0}, {2, -3}}) {
    Classification c = classify(h3_cosym(a, 1, b, 1));
    CHECK(c.level == Level::StrongGeneralizedContact);
    CHECK(c.llstar_bialgebroid);
    CHECK(c.e_pair_bialgebroid);
    CHECK(!c.obstruction_nonzero);
  }
}

TEST_CASE("classify: su(2) normal is strong but the E-pair is not a bialgebroid") {
  Classification c = classify(su2_normal());
  CHECK(c.level == Level::StrongGeneralizedContact);
  CHECK(c.llstar_bialgebroid);
  CHECK(!c.e_pair_bialgebroid);
  // witness: [[X1 - i X2, X1 + i X2]] = -2i X3 escapes E10 + E01
  auto a = su2();
  GenVector g1 = gv(a, {{0, ONE}, {1, -I}}, {});
  GenVector br = courant_bracket(g1, g1.conj());
  CHECK(br == gv(a, {{2, GaussRational(-2) * I}}, {}));
  EigenData eig = eigenbundles(su2_normal());
  std::vector<GenVector> epair = eig.E10.generators();
  for (const auto& g : eig.E01.generators()) epair.push_back(g);
  CHECK(!SubbundleSpan(a, epair).contains(br));
}

TEST_CASE("classify: invalid input reports Invalid") {
  auto a = su2();
  Gacs j{a, KVector::basis(3, 2), KForm::basis(3, 2), KVector(3, 2), KForm(3, 2), Endo::zero(3)};
  Classification c = classify(j);
  CHECK(c.level == Level::Invalid);
  CHECK(!c.violations.empty());
}

TEST_CASE("obstruction: su(2) contact value -1/2") {
  AltTensor nij = obstruction(su2_contact());
  // basis of L* is [eta, f...]; locate the triple (X1 + i s2, X2 - i s1, s3)
  auto a = su2();
  GenVector v0 = gv(a, {{0, ONE}}, {{1, I}});
  GenVector v1 = gv(a, {{1, ONE}}, {{0, -I}});
  GenVector v2 = gv(a, {}, {{2, ONE}});
  CHECK(nij.eval({v0, v1, v2}) == gauss(-1, 2));
  CHECK(!nij.is_zero());
}

TEST_CASE("obstruction: cosymplectic structures have zero obstruction") {
  CHECK(obstruction(h3_cosym(0, 1, 0, 1)).is_zero());
  CHECK(obstruction(h3_cosym(2, 1, -3, 1)).is_zero());
  CHECK(obstruction(h3_family(gauss(1, 2), gauss(3, 5), gauss(4, 5))).is_zero());
}

TEST_CASE("obstruction requires closed L") {
  // an invalid/odd structure cannot even reach the obstruction; build a valid
  // one with non-closed L instead: rescaled su(2) contact stays closed, so
  // fabricate phi with broken integrability via the family at r = 0 (trivial)
  // and then a hand-made AlmostOnly example:
  auto a = su2();
  // phi swapping X1 -> X3 direction breaks Relation3, so use a valid but
  // AlmostOnly structure: take the su(2) almost-contact triple with phi
  // rotated into the (X1, X3) plane; eta = s2, F = X2.
  Endo phi = Endo::rank_one(KVector::basis(3, 2), KForm::basis(3, 0)) -
             Endo::rank_one(KVector::basis(3, 0), KForm::basis(3, 2));
  Gacs j = from_almost_contact(a, KVector::basis(3, 1), KForm::basis(3, 1), phi);
  Classification c = classify(j);
  if (c.level == Level::AlmostOnly) {
    CHECK_THROWS_WITH_AS(obstruction(j), doctest::Contains("LNotClosed"), gcx::Error);
  } else {
    CHECK(c.level != Level::Invalid);
  }
}

TEST_CASE("type_components: su(2) normal d eta is type (1,1)") {
  Gacs j = su2_normal();
  KForm deta = gcx::liealg::ce_d(*j.algebra, j.eta);
  TypeBlocks blocks = type_components(j, deta);
  CHECK(blocks.block20.is_zero());
  CHECK(blocks.block02.is_zero());
  CHECK(!blocks.block11.is_zero());
}

TEST_CASE("type_components: zero form gives zero blocks") {
  Gacs j = su2_normal();
  TypeBlocks blocks = type_components(j, KForm(3, 2));
  CHECK(blocks.block20.is_zero());
  CHECK(blocks.block11.is_zero());
  CHECK(blocks.block02.is_zero());
}

TEST_CASE("type_components: conjugate symmetry for real forms") {
  Gacs j = su2_contact();
  KForm deta = gcx::liealg::ce_d(*j.algebra, j.eta);
  TypeBlocks blocks = type_components(j, deta);
  CHECK(blocks.block02 == blocks.block20.conj());
}

TEST_CASE("from_contact: su(2)") {
  Gacs j = su2_contact();
  CHECK(j.F == KVector::basis(3, 2));
  CHECK(j.theta == wedge(KForm::basis(3, 0), KForm::basis(3, 1)));
  CHECK(j.pi == wedge(KVector::basis(3, 0), KVector::basis(3, 1)));
  CHECK(j.phi.is_zero());
}

TEST_CASE("from_contact: kod5 contact form e5") {
  auto k5 = kod5();
  Gacs j = from_contact(k5, KForm::basis(5, 4));
  CHECK(j.F == KVector::basis(5, 4));
  CHECK(j.theta == wedge(KForm::basis(5, 0), KForm::basis(5, 2)) -
                       wedge(KForm::basis(5, 1), KForm::basis(5, 3)));
  CHECK(j.pi == wedge(KVector::basis(5, 0), KVector::basis(5, 2)) -
                    wedge(KVector::basis(5, 1), KVector::basis(5, 3)));
  CHECK(j.phi.is_zero());
}

TEST_CASE("from_contact rejects non-contact forms") {
  CHECK_THROWS_WITH_AS(from_contact(h3(), KForm::basis(3, 0)), doctest::Contains("NotContact"),
                       gcx::Error);
}

TEST_CASE("from_cosymplectic: h3 family") {
  // eta = a1, theta = a2^a3 + a a1^a2 + b a1^a3; Reeb field X1 - b X2 + a X3
  for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 0}, {1, 0}, {2, -3}}) {
    auto h = h3();
    KForm theta = wedge(KForm::basis(3, 1), KForm::basis(3, 2)) +
                  GaussRational(a) * wedge(KForm::basis(3, 0), KForm::basis(3, 1)) +
                  GaussRational(b) * wedge(KForm::basis(3, 0), KForm::basis(3, 2));
    auto result = from_cosymplectic(h, KForm::basis(3, 0), theta);
    KVector expected_f = KVector::basis(3, 0) - GaussRational(b) * KVector::basis(3, 1) +
                         GaussRational(a) * KVector::basis(3, 2);
    CHECK(result.j.F == expected_f);
    CHECK(result.j.pi == wedge(KVector::basis(3, 1), KVector::basis(3, 2)));
    CHECK(result.cosymplectic);
    CHECK(result.non_closed.empty());
  }
}

TEST_CASE("from_cosymplectic: su(2) pair is almost, eta fails closedness") {
  // oracle: ce_d on both forms decides the flag
  auto a = su2();
  KForm eta = KForm::basis(3, 2);
  KForm theta = wedge(KForm::basis(3, 0), KForm::basis(3, 1));
  CHECK(!gcx::liealg::ce_d(*a, eta).is_zero());
  CHECK(gcx::liealg::ce_d(*a, theta).is_zero());
  auto result = from_cosymplectic(a, eta, theta);
  CHECK(!result.cosymplectic);
  CHECK(result.non_closed == std::vector<std::string>{"eta"});
}

TEST_CASE("from_almost_contact and is_normal") {
  auto a = su2();
  // su(2) normal triple
  auto rep = is_normal(a, KVector::basis(3, 2), KForm::basis(3, 2), su2_normal_phi());
  CHECK(rep.normal);

  // kod5 J0 triple is not normal
  auto k5 = kod5();
  Endo phi5 = Endo::rank_one(KVector::basis(5, 1), KForm::basis(5, 0)) -
              Endo::rank_one(KVector::basis(5, 0), KForm::basis(5, 1)) +
              Endo::rank_one(KVector::basis(5, 3), KForm::basis(5, 2)) -
              Endo::rank_one(KVector::basis(5, 2), KForm::basis(5, 3));
  auto rep5 = is_normal(k5, KVector::basis(5, 4), KForm::basis(5, 4), phi5);
  CHECK(!rep5.normal);
  CHECK(!rep5.nijenhuis_residuals.empty());

  // abelian R^3: all brackets vanish, so the triple is normal
  auto ab = std::make_shared<gcx::liealg::LieAlgebra>(gcx::liealg::LieAlgebra::abelian(3));
  auto rep_ab = is_normal(ab, KVector::basis(3, 2), KForm::basis(3, 2), su2_normal_phi());
  CHECK(rep_ab.normal);

  CHECK_THROWS_WITH_AS(
      from_almost_contact(a, KVector::basis(3, 2), KForm::basis(3, 2), Endo::zero(3)),
      doctest::Contains("NotAlmostContact"), gcx::Error);
}

TEST_CASE("mc_check: the h3 Maurer-Cartan solution") {
  Gacs j = h3_cosym(0, 1, 0, 1);
  DeformParam gamma = h3_gamma();
  CHECK(mc_check(j, gamma).is_zero());

  // Gamma = 0
  DeformParam zero{gcx::courant::BiVec{}};
  CHECK(mc_check(j, zero).is_zero());

  // t Gamma for t = r(c + i s) rational samples
  for (auto [r, c, s] :
       std::vector<std::array<GaussRational, 3>>{{gauss(1, 2), gauss(3, 5), gauss(4, 5)},
                                                 {GaussRational(2), gauss(5, 13), gauss(12, 13)},
                                                 {gauss(1, 3), gauss(-3, 5), gauss(4, 5)}}) {
    GaussRational t = r * GaussRational(c.re(), GaussRational(0).re()) + GaussRational(0);
    t = r * (c + I * s);
    DeformParam scaled{gamma.gamma.scaled(t)};
    CHECK(mc_check(j, scaled).is_zero());
  }
}

TEST_CASE("mc_check refuses non-strong structures") {
  DeformParam zero{gcx::courant::BiVec{}};
  CHECK_THROWS_WITH_AS(mc_check(su2_contact(), zero), doctest::Contains("NotStrong"), gcx::Error);
}

TEST_CASE("deform_E recovers the J_t family spans") {
  Gacs j = h3_cosym(0, 1, 0, 1);
  DeformParam gamma = h3_gamma();
  auto h = j.algebra;

  auto family_span = [&](const GaussRational& r, const GaussRational& c, const GaussRational& s) {
    GaussRational rs = r * s, rc = r * c;
    // (1+rs) X2 + rc a3 - i (1-rs) a3 - i rc X2,
    // (1+rs) X3 - rc a2 + i (1-rs) a2 - i rc X3
    GenVector g2 = gv(h, {{1, ONE + rs - I * rc}}, {{2, rc - I * (ONE - rs)}});
    GenVector g3 = gv(h, {{2, ONE + rs - I * rc}}, {{1, -rc + I * (ONE - rs)}});
    return SubbundleSpan(h, {g2, g3});
  };

  for (auto [r, c, s] :
       std::vector<std::array<GaussRational, 3>>{{gauss(1, 2), gauss(3, 5), gauss(4, 5)},
                                                 {GaussRational(2), gauss(5, 13), gauss(12, 13)},
                                                 {gauss(1, 3), gauss(-3, 5), gauss(4, 5)}}) {
    GaussRational t = r * (c + I * s);
    SubbundleSpan deformed = deform_E(j, gamma, t);
    CHECK(span_equal(deformed, family_span(r, c, s)));
  }

  // t = 0 leaves E10 unchanged
  SubbundleSpan at_zero = deform_E(j, gamma, GaussRational(0));
  CHECK(span_equal(at_zero, eigenbundles(j).E10));
}

TEST_CASE("deform matches the family eigenbundles directly") {
  // the family structure J_t must have E10 equal to the deformation graph
  DeformParam gamma = h3_gamma();
  Gacs base = h3_cosym(0, 1, 0, 1);
  for (auto [r, c, s] :
       std::vector<std::array<GaussRational, 3>>{{gauss(1, 2), gauss(3, 5), gauss(4, 5)},
                                                 {gauss(1, 3), gauss(-3, 5), gauss(4, 5)}}) {
    GaussRational t = r * (c + I * s);
    Gacs jt = h3_family(r, c, s);
    EigenData eig = eigenbundles(jt);
    SubbundleSpan graph = deform_E(base, gamma, t);
    CHECK(span_equal(eig.E10, graph));
  }
}

TEST_CASE("kodaira_family: fixed points of the family") {
  // t = 0: classical complex structure J e1 = e2, J e3 = e4
  Gcs j0 = kodaira_family(GaussRational(0), GaussRational(0), GaussRational(0), GaussRational(0));
  CHECK(validate_gcs(j0).empty());
  CHECK(j0.pi.is_zero());
  CHECK(j0.theta.is_zero());
  CHECK(j0.phi.apply(KVector::basis(4, 0)) == KVector::basis(4, 1));
  CHECK(j0.phi.apply(KVector::basis(4, 2)) == KVector::basis(4, 3));
  CHECK(gcs_integrable(j0).integrable);
  // eigenspan equals the row space
  CHECK(span_equal(minus_i_eigenspan(j0),
                   kodaira_row_span(j0.algebra, GaussRational(0), GaussRational(0),
                                    GaussRational(0), GaussRational(0))));

  // generic classical complex point
  Gcs jg = kodaira_family(GaussRational(0), gauss(1, 3), gauss(2, 5), GaussRational(0));
  CHECK(validate_gcs(jg).empty());
  CHECK(gcs_integrable(jg).integrable);
  CHECK(span_equal(minus_i_eigenspan(jg),
                   kodaira_row_span(jg.algebra, GaussRational(0), gauss(1, 3), gauss(2, 5),
                                    GaussRational(0))));

  // symplectic point: t1 = i/2, t4 = 2i, phi block zero (derived oracle:
  // reconstruct blocks and inspect)
  Gcs js = kodaira_family(gauss(0, 1, 1, 2), GaussRational(0), GaussRational(0),
                          gauss(0, 1, 2, 1));
  CHECK(validate_gcs(js).empty());
  CHECK(gcs_integrable(js).integrable);
  CHECK(js.phi.is_zero());
  CHECK(!js.pi.is_zero());
  CHECK(!js.theta.is_zero());
}

TEST_CASE("kodaira_family rejects bad parameter points") {
  // t3 = 1 makes row1 = u1 + ubar1 real, hence non-transverse to conjugates
  CHECK_THROWS_AS(kodaira_family(GaussRational(0), GaussRational(0), GaussRational(1),
                                 GaussRational(0)),
                  gcx::Error);
}

TEST_CASE("validate_gcs flags a non-eigen random endomorphism") {
  auto k4 = kod4();
  // phi alone with phi^2 != -I
  Gcs bad{k4, KVector(4, 2), KForm(4, 2),
          Endo::rank_one(KVector::basis(4, 0), KForm::basis(4, 1))};
  CHECK(!validate_gcs(bad).empty());
}

TEST_CASE("lift_gcs: kod4 complex J lifts to the kod5 structure") {
  Gcs j = kodaira_family(GaussRational(0), GaussRational(0), GaussRational(0), GaussRational(0));
  KForm omega = -(wedge(KForm::basis(4, 0), KForm::basis(4, 2)) -
                  wedge(KForm::basis(4, 1), KForm::basis(4, 3)));
  auto [g, lifted] = lift_gcs(j.algebra, omega, j);
  CHECK(g->dim() == 5);
  CHECK(g->bracket(0, 1) == KVector::basis(5, 2));
  CHECK(g->bracket(0, 2) == -KVector::basis(5, 4));
  CHECK(g->bracket(1, 3) == KVector::basis(5, 4));
  CHECK(lifted.F == KVector::basis(5, 4));
  CHECK(lifted.eta == KForm::basis(5, 4));
  CHECK(lifted.pi.is_zero());
  CHECK(lifted.theta.is_zero());
  // phi = e2 (x) e^1 - e1 (x) e^2 + e4 (x) e^3 - e3 (x) e^4
  Endo expected = Endo::rank_one(KVector::basis(5, 1), KForm::basis(5, 0)) -
                  Endo::rank_one(KVector::basis(5, 0), KForm::basis(5, 1)) +
                  Endo::rank_one(KVector::basis(5, 3), KForm::basis(5, 2)) -
                  Endo::rank_one(KVector::basis(5, 2), KForm::basis(5, 3));
  CHECK(lifted.phi == expected);
  Classification c = classify(lifted);
  CHECK(c.level == Level::GeneralizedContact);
  CHECK(!c.llstar_bialgebroid);
}

TEST_CASE("lift_gcs: degenerate extension of the abelian plane is strong") {
  // oracle: the full classification pipeline on the lift
  auto ab2 = std::make_shared<gcx::liealg::LieAlgebra>(gcx::liealg::LieAlgebra::abelian(2));
  Endo jmat = Endo::rank_one(KVector::basis(2, 1), KForm::basis(2, 0)) -
              Endo::rank_one(KVector::basis(2, 0), KForm::basis(2, 1));
  Gcs j{ab2, KVector(2, 2), KForm(2, 2), jmat};
  CHECK(validate_gcs(j).empty());
  auto [g, lifted] = lift_gcs(ab2, KForm(2, 2), j);
  Classification c = classify(lifted);
  CHECK(c.level == Level::StrongGeneralizedContact);
}

TEST_CASE("rescale: classification level and spans are invariant") {
  std::vector<GaussRational> factors = {ONE, GaussRational(2), GaussRational(-3), gauss(5, 7)};
  std::vector<Gacs> examples = {su2_contact(), h3_cosym(0, 1, 0, 1), su2_normal()};
  for (const auto& j : examples) {
    Classification base = classify(j);
    EigenData eig = eigenbundles(j);
    for (const auto& f : factors) {
      Gacs scaled = rescale(j, f);
      CHECK(validate_gacs(scaled).empty());
      Classification c = classify(scaled);
      CHECK(c.level == base.level);
      EigenData eig2 = eigenbundles(scaled);
      CHECK(span_equal(eig.E10, eig2.E10));
      CHECK(span_equal(eig.L, eig2.L));
      CHECK(span_equal(eig.Lstar, eig2.Lstar));
    }
  }
  // f = 1 is the identity
  Gacs j = su2_contact();
  Gacs same = rescale(j, ONE);
  CHECK(same.F == j.F);
  CHECK(same.eta == j.eta);
  // obstruction of a cosymplectic structure stays zero under rescaling
  CHECK(obstruction(rescale(h3_cosym(0, 1, 0, 1), GaussRational(-3))).is_zero());
  CHECK_THROWS_AS(rescale(j, GaussRational(0)), gcx::Error);
  CHECK_THROWS_AS(rescale(j, I), gcx::Error);
}

TEST_CASE("theorem-bi equivalence on randomized valid structures") {
  // random contact forms on su(2) and h3 via from_contact, plus rescales;
  // given closed L: closedness(L*) iff the (2,0) block of d eta vanishes
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 20; ++trial) {
    bool use_su2 = trial % 2 == 0;
    auto alg = use_su2 ? su2() : h3();
    std::vector<GaussRational> c(3);
    std::uniform_int_distribution<long> pick(-3, 3);
    for (auto& x : c) x = GaussRational(pick(rng));
    KForm eta(3, 1);
    for (int k = 0; k < 3; ++k) eta.add_term({k}, c[k]);
    Gacs j;
    try {
      j = from_contact(alg, eta);
    } catch (const gcx::Error&) {
      continue;  // degenerate sample
    }
    ++checked;
    EigenData eig = eigenbundles(j);
    REQUIRE(gcx::courant::closedness(eig.L).closed);
    bool lstar_closed = gcx::courant::closedness(eig.Lstar).closed;
    KForm deta = gcx::liealg::ce_d(*alg, j.eta);
    TypeBlocks blocks = type_components(j, deta);
    CHECK(lstar_closed == blocks.block20.is_zero());
  }
  CHECK(checked >= 20);
}

TEST_CASE("obstruction consistency across catalog entries with closed L") {
  // the internal dual-route assertion runs inside obstruction(); reaching
  // a value here means both routes agreed exactly
  std::vector<Gacs> all = {su2_normal(), su2_contact(), h3_cosym(0, 1, 0, 1),
                           h3_cosym(1, 1, 0, 1), h3_cosym(2, 1, -3, 1),
                           h3_family(gauss(1, 2), gauss(3, 5), gauss(4, 5)),
                           h3_family(GaussRational(2), gauss(5, 13), gauss(12, 13))};
  for (const auto& j : all) CHECK_NOTHROW(obstruction(j));
}

TEST_CASE("e-pair bialgebroid property: mixed brackets carry no Reeb component") {
  // When d eta vanishes on ker eta, a mixed bracket [[E10, E01]] may pick up
  // an L_eta part (h3: [[X2 - i a3, X2 + i a3]] = -2i a1) but never an L_F
  // part: eta(rho [[x, y]]) = 0.
  std::vector<Gacs> flagged = {h3_cosym(0, 1, 0, 1), h3_cosym(2, 1, -3, 1)};
  for (const auto& j : flagged) {
    Classification c = classify(j);
    REQUIRE(c.e_pair_bialgebroid);
    EigenData eig = eigenbundles(j);
    std::vector<GenVector> pair_gens = eig.E10.generators();
    for (const auto& g : eig.E01.generators()) pair_gens.push_back(g);
    pair_gens.push_back(j.eta_section());
    SubbundleSpan pair_plus_eta(j.algebra, pair_gens);
    for (const auto& x : eig.E10.generators())
      for (const auto& y : eig.E01.generators()) {
        GenVector br = courant_bracket(x, y);
        CHECK(pair_plus_eta.contains(br));
        CHECK(gcx::multilinear::eval(j.eta, {gcx::courant::anchor(br)}).is_zero());
      }
  }
  // contrast: su(2) normal has e_pair_bialgebroid = false and a mixed bracket
  // with a genuine Reeb component
  Gacs n = su2_normal();
  REQUIRE(!classify(n).e_pair_bialgebroid);
  EigenData eig = eigenbundles(n);
  bool reeb_component = false;
  for (const auto& x : eig.E10.generators())
    for (const auto& y : eig.E01.generators())
      if (!gcx::multilinear::eval(n.eta, {gcx::courant::anchor(courant_bracket(x, y))}).is_zero())
        reeb_component = true;
  CHECK(reeb_component);
}

TEST_CASE("conjugation: closedness transfers to conjugate spans") {
  std::vector<Gacs> all = {su2_normal(), su2_contact(), h3_cosym(1, 1, 0, 1)};
  for (const auto& j : all) {
    EigenData eig = eigenbundles(j);
    CHECK(gcx::courant::closedness(eig.L).closed ==
          gcx::courant::closedness(eig.Lbar).closed);
    CHECK(gcx::courant::closedness(eig.Lstar).closed ==
          gcx::courant::closedness(eig.Lbarstar).closed);
  }
}

TEST_CASE("mc_check exercises the eta-line projection on a 5-dim strong example") {
  // su(2) + R^2 with a normal almost contact structure: the differential of a
  // deformation parameter acquires a genuine eta-component that the
  // projection must drop; mc_check also recomputes in a recombined basis
  // internally and asserts agreement.
  std::map<std::pair<int, int>, KVector> b;
  b[{0, 1}] = -KVector::basis(5, 2);
  b[{1, 2}] = -KVector::basis(5, 0);
  b[{0, 2}] = KVector::basis(5, 1);
  auto alg = std::make_shared<gcx::liealg::LieAlgebra>(
      5, std::move(b), gcx::liealg::LieAlgebra::Validate::Check, "X", "s");
  Endo phi = Endo::rank_one(KVector::basis(5, 1), KForm::basis(5, 0)) -
             Endo::rank_one(KVector::basis(5, 0), KForm::basis(5, 1)) +
             Endo::rank_one(KVector::basis(5, 4), KForm::basis(5, 3)) -
             Endo::rank_one(KVector::basis(5, 3), KForm::basis(5, 4));
  auto rep = is_normal(alg, KVector::basis(5, 2), KForm::basis(5, 2), phi);
  REQUIRE(rep.normal);
  Gacs j = from_almost_contact(alg, KVector::basis(5, 2), KForm::basis(5, 2), phi);
  Classification c = classify(j);
  REQUIRE(c.level == Level::StrongGeneralizedContact);

  EigenData eig = eigenbundles(j);
  REQUIRE(eig.E01.rank() == 4);
  // Gamma = f0 ^ f1 over the canonical E01 generators
  const auto& f = eig.E01.generators();
  DeformParam gamma{gcx::courant::BiVec::decomposable(f[0], f[1])};
  auto residual = mc_check(j, gamma);
  // all E01 brackets vanish here, and d_E Gamma projects to zero even though
  // d_L Gamma has a nonzero eta-part
  CHECK(residual.is_zero());
}

TEST_CASE("eigenbundles reports rank defects on invalid quintuples") {
  auto a = su2();
  Gacs j{a, KVector::basis(3, 2), KForm::basis(3, 2), KVector(3, 2), KForm(3, 2), Endo::zero(3)};
  CHECK_THROWS_WITH_AS(eigenbundles(j), doctest::Contains("RankDefect"), gcx::Error);
}
