#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gcx/report.hpp"
#include "gcx/structures.hpp"

namespace gcx::catalog {

using exactnum::GaussRational;
using liealg::AlgebraPtr;

// Built-in algebras. su(2) uses the cyclic table [X1,X2] = -X3; h3 is the
// 3-dimensional Heisenberg algebra [X1,X2] = -X3; kod4 is the nilpotent
// algebra of the Kodaira surface, [e1,e2] = e3; kod5 its central extension by
// -(e1^e3 - e2^e4).
AlgebraPtr su2();
AlgebraPtr h3();
AlgebraPtr kod4();
AlgebraPtr kod5();

// Built-in structures.
structures::Gacs su2_normal_gacs();
structures::Gacs su2_contact_gacs();
structures::Gacs h3_cosymplectic_gacs(const GaussRational& a, const GaussRational& b);
// J_t family on h3 at t = r(c + i s); requires c^2 + s^2 = 1 and r != +-1.
structures::Gacs h3_family_gacs(const GaussRational& r, const GaussRational& c,
                                const GaussRational& s);
structures::Gcs kod4_complex_gcs();
structures::Gacs kod5_contact_gacs();   // from the contact form e5
structures::Gacs kod5_lift_gacs();      // lift of the complex structure
// The Maurer-Cartan solution (a2 + i X3) ^ (a3 - i X2) on the h3 cosymplectic
// structure at a = b = 0.
structures::DeformParam h3_mc_gamma();

// Where an expected value comes from: a known value from the literature, a
// value computed here by an independent oracle, or an immediate consequence
// of the definitions.
enum class Source { Reference, Oracle, Definition };

struct ExpectationResult {
  std::string name;
  Source source;
  bool pass;
  std::string expected;
  std::string actual;
};

struct EntryResult {
  std::string entry;
  std::vector<ExpectationResult> expectations;
  bool passed() const {
    for (const auto& e : expectations)
      if (!e.pass) return false;
    return true;
  }
};

using Params = std::map<std::string, GaussRational>;

struct CatalogEntry {
  std::string name;
  std::string summary;
  // Runs every expectation; each carries its source tag.
  std::function<EntryResult(const Params&)> run;
};

const std::vector<CatalogEntry>& catalog_entries();
std::vector<std::string> catalog_names();

// Runs one entry (UnknownEntry if absent) or, with name "all", the whole
// catalog over the baked-in parameter samples.
std::vector<EntryResult> catalog_run(const std::string& name, const Params& params);

report::Node entry_report(const EntryResult& r);

}  // namespace gcx::catalog
