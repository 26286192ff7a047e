#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcx/catalog.hpp"

using namespace gcx::catalog;
using gcx::exactnum::GaussRational;
using gcx::exactnum::gauss;

TEST_CASE("every catalog entry passes over the baked samples") {
  auto results = catalog_run("all", {});
  CHECK(!results.empty());
  for (const auto& r : results) {
    INFO(r.entry);
    for (const auto& e : r.expectations) {
      INFO(e.name << " expected=" << e.expected << " actual=" << e.actual);
      CHECK(e.pass);
    }
    CHECK(r.passed());
  }
}

TEST_CASE("entries carry expectations with source tags") {
  for (const auto& e : catalog_entries()) {
    auto results = catalog_run(e.name, {});
    REQUIRE(!results.empty());
    for (const auto& r : results) CHECK(!r.expectations.empty());
  }
}

TEST_CASE("h3_family at t = 0 equals h3_cosymplectic(0,0)") {
  auto j_family = h3_family_gacs(GaussRational(0), gauss(3, 5), gauss(4, 5));
  auto j_cosym = h3_cosymplectic_gacs(GaussRational(0), GaussRational(0));
  CHECK(j_family.F == j_cosym.F);
  CHECK(j_family.eta == j_cosym.eta);
  CHECK(j_family.pi == j_cosym.pi);
  CHECK(j_family.theta == j_cosym.theta);
  CHECK(j_family.phi == j_cosym.phi);
  auto eig_f = gcx::structures::eigenbundles(j_family);
  auto eig_c = gcx::structures::eigenbundles(j_cosym);
  CHECK(gcx::courant::span_equal(eig_f.L, eig_c.L));
  CHECK(gcx::courant::span_equal(eig_f.Lstar, eig_c.Lstar));
  CHECK(gcx::structures::classify(j_family).level == gcx::structures::classify(j_cosym).level);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_WITH_AS(catalog_run("h3_family", {{"r", GaussRational(1)},
                                                 {"c", GaussRational(1)},
                                                 {"s", GaussRational(0)}}),
                       doctest::Contains("BadParams"), gcx::Error);
  CHECK_THROWS_WITH_AS(catalog_run("h3_family", {{"r", gauss(1, 2)},
                                                 {"c", gauss(1, 2)},
                                                 {"s", gauss(1, 2)}}),
                       doctest::Contains("BadParams"), gcx::Error);
  CHECK_THROWS_WITH_AS(catalog_run("no_such_entry", {}),
                       doctest::Contains("UnknownEntry"), gcx::Error);
}

TEST_CASE("report order for 'all' is sorted by entry name") {
  auto results = catalog_run("all", {});
  for (size_t k = 1; k < results.size(); ++k) CHECK(results[k - 1].entry <= results[k].entry);
}

TEST_CASE("entry reports render deterministically") {
  auto r1 = catalog_run("su2_contact", {});
  auto r2 = catalog_run("su2_contact", {});
  REQUIRE(r1.size() == r2.size());
  auto n1 = entry_report(r1[0]);
  auto n2 = entry_report(r2[0]);
  CHECK(gcx::report::render(n1, gcx::report::Format::Text) ==
        gcx::report::render(n2, gcx::report::Format::Text));
}
