#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcx/courant.hpp"

namespace gcx::dsl {

using courant::GenVector;
using exactnum::GaussRational;
using liealg::AlgebraPtr;
using multilinear::Endo;
using multilinear::KForm;
using multilinear::KVector;

// One structure block. Fields are resolved against the named algebra at parse
// time; which fields are required depends on the kind.
struct StructureDef {
  std::string name;
  std::string algebra;
  std::string kind;  // contact | cosymplectic | almost_contact | explicit | complex
  std::optional<KForm> eta;
  std::optional<KForm> theta;
  std::optional<KVector> f;
  std::optional<KVector> pi;
  std::optional<Endo> phi;

  friend bool operator==(const StructureDef& a, const StructureDef& b) {
    return a.name == b.name && a.algebra == b.algebra && a.kind == b.kind && a.eta == b.eta &&
           a.theta == b.theta && a.f == b.f && a.pi == b.pi && a.phi == b.phi;
  }
};

struct Document {
  std::vector<std::string> algebra_order;
  std::map<std::string, AlgebraPtr> algebras;
  std::vector<std::string> structure_order;
  std::map<std::string, StructureDef> structures;
  std::vector<std::pair<std::string, std::string>> directives;

  const AlgebraPtr& algebra(const std::string& name) const;
  const StructureDef& structure(const std::string& name) const;

  friend bool operator==(const Document& a, const Document& b);
};

// Total parse: returns the document or throws Error(Parse) carrying
// "line L, column C" in the message. Never leaves partial state behind.
Document parse(const std::string& text);
Document parse_file(const std::string& path);

std::string print(const Document& doc);

// Expression entry points shared with CLI flags. Identifiers are a letter
// prefix plus a 1-based index; context decides whether they name basis
// vectors or covectors.
KForm parse_form(const std::string& text, int dim);
KVector parse_vector(const std::string& text, int dim);
Endo parse_endo(const std::string& text, int dim);
GenVector parse_gensection(const std::string& text, const AlgebraPtr& alg);
// a wedge of two parenthesized generalized sections, e.g. (a2+i*X3)^(a3-i*X2)
courant::BiVec parse_gamma(const std::string& text, const AlgebraPtr& alg);

}  // namespace gcx::dsl
