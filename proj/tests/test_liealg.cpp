#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gcx/liealg.hpp"

using namespace gcx::liealg;
using namespace gcx::multilinear;
using gcx::exactnum::GaussRational;

namespace {

std::mt19937 rng(424243);

GaussRational random_gauss() {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  return GaussRational(gcx::exactnum::rat(num(rng), den(rng)),
                       gcx::exactnum::rat(num(rng), den(rng)));
}

KForm random_form(int dim, int degree) {
  KForm a(dim, degree);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  for (int t = 0; t < 2 * dim; ++t) {
    std::vector<int> idx(degree);
    for (int q = 0; q < degree; ++q) idx[q] = pick(rng);
    a.add_term(idx, random_gauss());
  }
  return a;
}

LieAlgebra make_su2() {
  std::map<std::pair<int, int>, KVector> b;
  b[{0, 1}] = -KVector::basis(3, 2);
  b[{1, 2}] = -KVector::basis(3, 0);
  b[{0, 2}] = KVector::basis(3, 1);  // [X1,X3] = -[X3,X1] = X2
  return LieAlgebra(3, std::move(b), LieAlgebra::Validate::Check, "X", "s");
}

LieAlgebra make_h3() {
  std::map<std::pair<int, int>, KVector> b;
  b[{0, 1}] = -KVector::basis(3, 2);
  return LieAlgebra(3, std::move(b));
}

LieAlgebra make_kod4() {
  std::map<std::pair<int, int>, KVector> b;
  b[{0, 1}] = KVector::basis(4, 2);
  return LieAlgebra(4, std::move(b), LieAlgebra::Validate::Check, "e", "e");
}

}  // namespace

TEST_CASE("check_jacobi: su(2) and abelian pass") {
  CHECK(check_jacobi(make_su2()).empty());
  CHECK(check_jacobi(LieAlgebra::abelian(4)).empty());
}

TEST_CASE("check_jacobi: kod4 extended by a non-closed 2-form fails") {
  LieAlgebra kod4 = make_kod4();
  KForm omega = wedge(KForm::basis(4, 2), KForm::basis(4, 3));  // e3 ^ e4, d omega != 0
  CHECK(ce_d(kod4, omega) == -wedge(wedge(KForm::basis(4, 0), KForm::basis(4, 1)),
                                    KForm::basis(4, 3)));
  LieAlgebra broken = central_extension_unchecked(kod4, omega);
  auto violations = check_jacobi(broken);
  REQUIRE(violations.size() == 1);
  // Brute-force oracle: the Jacobiator of the extension equals
  // -d omega(X,Y,Z) F, so the only violating increasing triple is where
  // d omega = -e1^e2^e4 is nonzero.
  bool found = false;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) {
        KVector ei = broken.basis_vector(i), ej = broken.basis_vector(j),
                ek = broken.basis_vector(k);
        KVector res = broken.bracket(broken.bracket(ei, ej), ek) +
                      broken.bracket(broken.bracket(ej, ek), ei) +
                      broken.bracket(broken.bracket(ek, ei), ej);
        if (!res.is_zero()) {
          CHECK(i == violations[0].i);
          CHECK(j == violations[0].j);
          CHECK(k == violations[0].k);
          found = true;
        }
      }
  CHECK(found);
  CHECK(violations[0].i == 0);
  CHECK(violations[0].j == 1);
  CHECK(violations[0].k == 3);
  CHECK(violations[0].residual == KVector::basis(5, 4));
}

TEST_CASE("ce_d: structure equations") {
  LieAlgebra kod4 = make_kod4();
  // de3 = -e1 ^ e2
  CHECK(ce_d(kod4, KForm::basis(4, 2)) ==
        -wedge(KForm::basis(4, 0), KForm::basis(4, 1)));
  CHECK(ce_d(kod4, KForm::basis(4, 0)).is_zero());

  // kod5: de5 = e1^e3 - e2^e4
  KForm omega = -(wedge(KForm::basis(4, 0), KForm::basis(4, 2)) -
                  wedge(KForm::basis(4, 1), KForm::basis(4, 3)));
  LieAlgebra kod5 = central_extension(kod4, omega);
  KForm de5 = ce_d(kod5, KForm::basis(5, 4));
  CHECK(de5 == wedge(KForm::basis(5, 0), KForm::basis(5, 2)) -
                   wedge(KForm::basis(5, 1), KForm::basis(5, 3)));

  LieAlgebra ab = LieAlgebra::abelian(3);
  CHECK(ce_d(ab, random_form(3, 1)).is_zero());
  CHECK(ce_d(ab, random_form(3, 2)).is_zero());

  // su(2) cyclic structure equations: d s1 = s2 ^ s3 and cyclic
  LieAlgebra su2 = make_su2();
  CHECK(ce_d(su2, KForm::basis(3, 0)) == wedge(KForm::basis(3, 1), KForm::basis(3, 2)));
  CHECK(ce_d(su2, KForm::basis(3, 1)) == wedge(KForm::basis(3, 2), KForm::basis(3, 0)));
  CHECK(ce_d(su2, KForm::basis(3, 2)) == wedge(KForm::basis(3, 0), KForm::basis(3, 1)));
}

TEST_CASE("d compose d vanishes, randomized over catalog algebras") {
  std::vector<LieAlgebra> algs = {make_su2(), make_h3(), make_kod4(), LieAlgebra::abelian(4)};
  for (const auto& g : algs)
    for (int trial = 0; trial < 50; ++trial) {
      KForm a = random_form(g.dim(), 1);
      CHECK(ce_d(g, ce_d(g, a)).is_zero());
      KForm b = random_form(g.dim(), 2);
      CHECK(ce_d(g, ce_d(g, b)).is_zero());
    }
}

TEST_CASE("lie_derivative: extension identities and invariance") {
  LieAlgebra kod4 = make_kod4();
  KForm omega = -(wedge(KForm::basis(4, 0), KForm::basis(4, 2)) -
                  wedge(KForm::basis(4, 1), KForm::basis(4, 3)));
  LieAlgebra kod5 = central_extension(kod4, omega);
  // L_{e1} e5 = iota_{e1} de5 = e3 = -iota_{e1} omega (on the extension)
  KForm omega5 = wedge(KForm::basis(5, 0), KForm::basis(5, 2)) -
                 wedge(KForm::basis(5, 1), KForm::basis(5, 3));
  omega5 = -omega5;
  KForm lhs = lie_derivative(kod5, KVector::basis(5, 0), KForm::basis(5, 4));
  CHECK(lhs == KForm::basis(5, 2));
  CHECK(lhs == -contract(KVector::basis(5, 0), omega5));

  // su(2) contact: L_F eta = 0 with F = X3, eta = s3
  LieAlgebra su2 = make_su2();
  CHECK(lie_derivative(su2, KVector::basis(3, 2), KForm::basis(3, 2)).is_zero());

  LieAlgebra ab = LieAlgebra::abelian(3);
  CHECK(lie_derivative(ab, KVector::basis(3, 0), random_form(3, 2)).is_zero());
}

TEST_CASE("lie_derivative is a wedge derivation, randomized") {
  LieAlgebra su2 = make_su2();
  for (int trial = 0; trial < 100; ++trial) {
    KVector x = KVector::basis(3, trial % 3);
    KForm a = random_form(3, 1), b = random_form(3, 1);
    KForm lhs = lie_derivative(su2, x, wedge(a, b));
    KForm rhs = wedge(lie_derivative(su2, x, a), b) + wedge(a, lie_derivative(su2, x, b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("central_extension: kod4 to kod5 structure constants") {
  LieAlgebra kod4 = make_kod4();
  KForm omega = -(wedge(KForm::basis(4, 0), KForm::basis(4, 2)) -
                  wedge(KForm::basis(4, 1), KForm::basis(4, 3)));
  LieAlgebra kod5 = central_extension(kod4, omega);
  CHECK(kod5.dim() == 5);
  CHECK(kod5.bracket(0, 1) == KVector::basis(5, 2));   // [e1,e2] = e3
  CHECK(kod5.bracket(0, 2) == -KVector::basis(5, 4));  // [e1,e3] = -e5
  CHECK(kod5.bracket(1, 3) == KVector::basis(5, 4));   // [e2,e4] = e5
  CHECK(kod5.bracket(0, 3).is_zero());
  CHECK(kod5.bracket(1, 2).is_zero());
  CHECK(kod5.bracket(2, 3).is_zero());
  for (int i = 0; i < 4; ++i) CHECK(kod5.bracket(i, 4).is_zero());
  CHECK(check_jacobi(kod5).empty());
}

TEST_CASE("central_extension: 2-dim abelian by area form is the Heisenberg algebra") {
  LieAlgebra ab2 = LieAlgebra::abelian(2);
  KForm area = wedge(KForm::basis(2, 0), KForm::basis(2, 1));
  LieAlgebra h3 = central_extension(ab2, area);
  CHECK(h3.dim() == 3);
  CHECK(h3.bracket(0, 1) == KVector::basis(3, 2));
  CHECK(h3.bracket(0, 2).is_zero());
  CHECK(h3.bracket(1, 2).is_zero());
}

TEST_CASE("central_extension: zero cocycle gives a central direct sum") {
  LieAlgebra su2 = make_su2();
  LieAlgebra ext = central_extension(su2, KForm(3, 2));
  CHECK(ext.dim() == 4);
  for (int i = 0; i < 3; ++i) CHECK(ext.bracket(i, 3).is_zero());
  CHECK(ext.bracket(0, 1) == -KVector::basis(4, 2));
}

TEST_CASE("central_extension rejects non-closed cocycles") {
  LieAlgebra kod4 = make_kod4();
  KForm omega = wedge(KForm::basis(4, 2), KForm::basis(4, 3));
  CHECK_THROWS_WITH_AS(central_extension(kod4, omega),
                       doctest::Contains("NonClosedCocycle"), gcx::Error);
}

TEST_CASE("extension Jacobi property over closed and non-closed cocycles") {
  std::vector<LieAlgebra> algs = {make_h3(), make_kod4(), LieAlgebra::abelian(3)};
  for (const auto& g : algs) {
    for (int trial = 0; trial < 20; ++trial) {
      KForm omega = random_form(g.dim(), 2);
      if (ce_d(g, omega).is_zero()) {
        CHECK(check_jacobi(central_extension(g, omega)).empty());
      } else {
        CHECK(!check_jacobi(central_extension_unchecked(g, omega)).empty());
      }
    }
  }
  // at least one non-closed witness per test algebra with nontrivial d
  LieAlgebra kod4 = make_kod4();
  KForm bad = wedge(KForm::basis(4, 2), KForm::basis(4, 3));
  CHECK(!check_jacobi(central_extension_unchecked(kod4, bad)).empty());
}

TEST_CASE("deferred construction allows broken tables, checked rejects them") {
  std::map<std::pair<int, int>, KVector> b;
  // [e1,e2] = e3, [e1,e3] = e1 violates Jacobi
  b[{0, 1}] = KVector::basis(3, 2);
  b[{0, 2}] = KVector::basis(3, 0);
  CHECK_THROWS_AS(LieAlgebra(3, b, LieAlgebra::Validate::Check), gcx::Error);
  LieAlgebra broken(3, b, LieAlgebra::Validate::Defer);
  CHECK(!check_jacobi(broken).empty());
}
