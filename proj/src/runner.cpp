#include "gcx/runner.hpp"

#include <chrono>
#include <sstream>

#include "gcx/catalog.hpp"
#include "gcx/polyfield.hpp"
#include "gcx/structures.hpp"

namespace gcx::runner {

using courant::GenVector;
using courant::SubbundleSpan;
using dsl::Document;
using dsl::StructureDef;
using multilinear::Endo;
using multilinear::KForm;
using multilinear::KVector;
using report::Node;
using structures::Classification;
using structures::Gacs;
using structures::Gcs;

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

struct Built {
  std::optional<Gacs> gacs;
  std::optional<Gcs> gcs;
  std::vector<structures::Violation> violations;  // explicit kind only
  std::vector<std::string> non_closed;            // cosymplectic kind only
};

Built build_structure(const Document& doc, const std::string& name) {
  const StructureDef& def = doc.structure(name);
  const auto& alg = doc.algebra(def.algebra);
  int n = alg->dim();
  Built out;
  auto need = [&](bool present, const char* field) {
    if (!present)
      throw Error(ErrorKind::Parse, "MissingField",
                  "structure '" + name + "' of kind " + def.kind + " needs " + field);
  };
  if (def.kind == "contact") {
    need(def.eta.has_value(), "eta");
    out.gacs = structures::from_contact(alg, *def.eta);
  } else if (def.kind == "cosymplectic") {
    need(def.eta.has_value(), "eta");
    need(def.theta.has_value(), "theta");
    auto res = structures::from_cosymplectic(alg, *def.eta, *def.theta);
    out.gacs = res.j;
    out.non_closed = res.non_closed;
  } else if (def.kind == "almost_contact") {
    need(def.f.has_value(), "F");
    need(def.eta.has_value(), "eta");
    need(def.phi.has_value(), "phi");
    out.gacs = structures::from_almost_contact(alg, *def.f, *def.eta, *def.phi);
  } else if (def.kind == "explicit") {
    need(def.f.has_value(), "F");
    need(def.eta.has_value(), "eta");
    Gacs j{alg, *def.f, *def.eta, def.pi.value_or(KVector(n, 2)),
           def.theta.value_or(KForm(n, 2)), def.phi.value_or(Endo::zero(n))};
    out.violations = structures::validate_gacs(j);
    out.gacs = j;
  } else if (def.kind == "complex") {
    Gcs j{alg, def.pi.value_or(KVector(n, 2)), def.theta.value_or(KForm(n, 2)),
          def.phi.value_or(Endo::zero(n))};
    out.violations = structures::validate_gcs(j);
    out.gcs = j;
  } else {
    throw Error(ErrorKind::Parse, "UnknownKind", "kind '" + def.kind + "'");
  }
  return out;
}

void describe_gacs(Node& node, const Gacs& j) {
  const auto& a = *j.algebra;
  node.put("algebra_dim", std::to_string(a.dim()));
  node.put("F", GenVector::from_vector(j.algebra, j.F).str());
  node.put("eta", GenVector::from_covector(j.algebra, j.eta).str());
}

void witnesses_node(Node& parent, const std::string& key,
                    const courant::ClosednessReport& rep,
                    const std::vector<GenVector>& gens) {
  Node& n = parent.put(key, rep.closed ? "closed" : "not_closed");
  for (const auto& w : rep.witnesses) {
    Node& wn = n.child("witness");
    wn.put("pair", "(" + gens[w.i].str() + ", " + gens[w.j].str() + ")");
    wn.put("bracket", w.bracket.str());
    wn.put("escaping", w.escaping.str());
  }
}

Node classification_node(const Gacs& j) {
  Classification c = structures::classify(j);
  Node node("classification");
  node.put("level", structures::level_name(c.level));
  if (c.level == structures::Level::Invalid) {
    for (const auto& v : c.violations) node.put("violation", v.relation + ": " + v.detail);
    return node;
  }
  node.put("llstar_bialgebroid", bool_str(c.llstar_bialgebroid));
  node.put("e_pair_bialgebroid", bool_str(c.e_pair_bialgebroid));
  node.put("obstruction_nonzero", bool_str(c.obstruction_nonzero));
  auto eig = structures::eigenbundles(j);
  witnesses_node(node, "L", c.l_report, eig.l_basis);
  witnesses_node(node, "Lstar", c.lstar_report, eig.lstar_basis);
  return node;
}

int cmd_validate(const Options& opt, const Document& doc, Node& report) {
  Built b = build_structure(doc, opt.entry);
  Node& n = report.child("validate");
  n.put("structure", opt.entry);
  if (b.gcs) {
    n.put("kind", "complex");
    for (const auto& v : b.violations) n.put("violation", v.relation + ": " + v.detail);
    n.put("valid", bool_str(b.violations.empty()));
    return b.violations.empty() ? kOk : kValidationError;
  }
  describe_gacs(n, *b.gacs);
  for (const auto& v : b.violations) n.put("violation", v.relation + ": " + v.detail);
  for (const auto& f : b.non_closed) n.put("non_closed_form", f);
  n.put("valid", bool_str(b.violations.empty()));
  return b.violations.empty() ? kOk : kValidationError;
}

int cmd_classify(const Options& opt, const Document& doc, Node& report) {
  Built b = build_structure(doc, opt.entry);
  if (b.gcs) {
    Node& n = report.child("gcs");
    n.put("structure", opt.entry);
    if (!b.violations.empty()) {
      for (const auto& v : b.violations) n.put("violation", v.relation + ": " + v.detail);
      return kValidationError;
    }
    auto integ = structures::gcs_integrable(*b.gcs);
    n.put("integrable", bool_str(integ.integrable));
    auto span = structures::minus_i_eigenspan(*b.gcs);
    witnesses_node(n, "minus_i_eigenspan", integ.report, span.generators());
    return kOk;
  }
  if (!b.violations.empty()) {
    Node& n = report.child("classification");
    n.put("level", "Invalid");
    for (const auto& v : b.violations) n.put("violation", v.relation + ": " + v.detail);
    return kValidationError;
  }
  report.children.push_back(classification_node(*b.gacs));
  return kOk;
}

int cmd_obstruction(const Options& opt, const Document& doc, Node& report) {
  Built b = build_structure(doc, opt.entry);
  if (!b.gacs || !b.violations.empty())
    throw Error(ErrorKind::Precondition, "NotGacs",
                "obstruction needs a valid generalized almost contact structure");
  courant::AltTensor nij = structures::obstruction(*b.gacs);
  Node& n = report.child("obstruction");
  n.put("structure", opt.entry);
  const auto& basis = nij.span().generators();
  Node& bn = n.child("lstar_basis");
  for (size_t k = 0; k < basis.size(); ++k)
    bn.put("v" + std::to_string(k), basis[k].str());
  Node& cn = n.child("components");
  if (nij.values().empty()) cn.value = "0";
  for (const auto& [idx, val] : nij.values()) {
    std::string key = "nij(";
    for (size_t k = 0; k < idx.size(); ++k)
      key += (k ? "," : "") + std::string("v") + std::to_string(idx[k]);
    key += ")";
    cn.put(key, val.str());
  }
  n.put("nonzero", bool_str(!nij.is_zero()));
  return kOk;
}

int cmd_brackets(const Options& opt, const Document& doc, Node& report) {
  Built b = build_structure(doc, opt.entry);
  if (!b.gacs || !b.violations.empty())
    throw Error(ErrorKind::Precondition, "NotGacs",
                "brackets needs a valid generalized almost contact structure");
  auto eig = structures::eigenbundles(*b.gacs);
  Node& n = report.child("brackets");
  n.put("structure", opt.entry);
  auto table = [&](const char* key, const std::vector<GenVector>& gens,
                   const SubbundleSpan& span) {
    Node& tn = n.child(key);
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j) {
        GenVector br = courant::courant_bracket(gens[i], gens[j]);
        Node& e =
            tn.put("[[" + gens[i].str() + ", " + gens[j].str() + "]]", br.str());
        e.put("inside", bool_str(span.contains(br)));
      }
  };
  table("L", eig.l_basis, eig.L);
  table("Lstar", eig.lstar_basis, eig.Lstar);
  return kOk;
}

int cmd_deform(const Options& opt, const Document& doc, Node& report) {
  Built b = build_structure(doc, opt.entry);
  if (!b.gacs || !b.violations.empty())
    throw Error(ErrorKind::Precondition, "NotGacs",
                "deform needs a valid generalized almost contact structure");
  if (opt.gamma.empty())
    throw Error(ErrorKind::Parse, "MissingField", "deform needs --gamma");
  courant::BiVec gamma = dsl::parse_gamma(opt.gamma, b.gacs->algebra);
  GaussRational t = GaussRational::parse(opt.t);
  structures::DeformParam param{gamma};
  structures::DeformParam scaled{gamma.scaled(t)};
  auto residual = structures::mc_check(*b.gacs, scaled);
  Node& n = report.child("deform");
  n.put("structure", opt.entry);
  n.put("t", t.str());
  n.put("mc_residual", residual.is_zero() ? "0" : "nonzero");
  if (!residual.is_zero()) return kPreconditionError;
  SubbundleSpan span = structures::deform_E(*b.gacs, param, t);
  Node& g = n.child("deformed_E10");
  int k = 0;
  for (const auto& gen : span.generators()) g.put("g" + std::to_string(k++), gen.str());
  return kOk;
}

int cmd_extend(const Options& opt, const Document& doc, Node& report) {
  const auto& h = doc.algebra(opt.entry);
  if (opt.omega.empty())
    throw Error(ErrorKind::Parse, "MissingField", "extend needs --omega");
  KForm omega = dsl::parse_form(opt.omega, h->dim());
  if (omega.degree() != 2)
    throw Error(ErrorKind::Parse, "MissingField", "--omega must be a 2-form");
  Node& n = report.child("extend");
  n.put("algebra", opt.entry);
  if (!opt.lift.empty()) {
    Built b = build_structure(doc, opt.lift);
    if (!b.gcs || !b.violations.empty())
      throw Error(ErrorKind::Precondition, "NotGcs",
                  "--lift needs a valid structure of kind complex");
    auto [g, lifted] = structures::lift_gcs(h, omega, *b.gcs);
    Node& gn = n.child("extension");
    gn.put("dim", std::to_string(g->dim()));
    for (const auto& [ij, v] : g->bracket_table())
      gn.put("[" + g->vec_prefix() + std::to_string(ij.first + 1) + "," + g->vec_prefix() +
                 std::to_string(ij.second + 1) + "]",
             GenVector::from_vector(g, v).str());
    Node& ln = n.child("lift");
    ln.put("F", GenVector::from_vector(lifted.algebra, lifted.F).str());
    ln.put("eta", GenVector::from_covector(lifted.algebra, lifted.eta).str());
    ln.children.push_back(classification_node(lifted));
    return kOk;
  }
  liealg::LieAlgebra g = liealg::central_extension(*h, omega);
  Node& gn = n.child("extension");
  gn.put("dim", std::to_string(g.dim()));
  auto gp = std::make_shared<liealg::LieAlgebra>(g);
  for (const auto& [ij, v] : g.bracket_table())
    gn.put("[" + g.vec_prefix() + std::to_string(ij.first + 1) + "," + g.vec_prefix() +
               std::to_string(ij.second + 1) + "]",
           GenVector::from_vector(gp, v).str());
  return kOk;
}

int cmd_darboux(const Options& opt, Node& report) {
  polyfield::DarbouxReport r = polyfield::darboux_model(opt.darboux_n);
  Node& n = report.child("darboux");
  n.put("n", std::to_string(r.n));
  for (const auto& c : r.checks) n.put(c.name, c.pass ? "pass" : "FAIL");
  n.put("obstruction_coefficient", r.obstruction_coefficient.str());
  n.put("all_pass", bool_str(r.all_pass()));
  return r.all_pass() ? kOk : kExpectationMismatch;
}

int cmd_catalog(const Options& opt, Node& report) {
  if (opt.catalog_action == "list") {
    Node& n = report.child("catalog");
    for (const auto& e : catalog::catalog_entries()) n.put(e.name, e.summary);
    return kOk;
  }
  std::string name = opt.entry.empty() ? "all" : opt.entry;
  auto results = catalog::catalog_run(name, opt.params);
  Node& n = report.child("catalog");
  bool all = true;
  for (const auto& r : results) {
    n.children.push_back(catalog::entry_report(r));
    all = all && r.passed();
  }
  n.put("all_pass", bool_str(all));
  return all ? kOk : kExpectationMismatch;
}

}  // namespace

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse: return kParseError;
    case ErrorKind::Validation: return kValidationError;
    case ErrorKind::Precondition: return kPreconditionError;
    case ErrorKind::Expectation: return kExpectationMismatch;
    case ErrorKind::Internal: return kInternalError;
  }
  return kInternalError;
}

Outcome run_command(const Options& opt, const dsl::Document* doc) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  out.report = Node("gcx");
  out.report.put("command", opt.command);
  auto attach_timing = [&] {
    if (!opt.include_timing) return;
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    out.report.put("timing_us", std::to_string(us));
  };
  try {
    if (opt.command == "darboux") {
      out.exit_code = cmd_darboux(opt, out.report);
      attach_timing();
      return out;
    }
    if (opt.command == "catalog") {
      out.exit_code = cmd_catalog(opt, out.report);
      attach_timing();
      return out;
    }
    if (!doc)
      throw Error(ErrorKind::Parse, "MissingDocument",
                  "command '" + opt.command + "' needs an input document");
    if (opt.entry.empty())
      throw Error(ErrorKind::Parse, "MissingEntry",
                  "command '" + opt.command + "' needs a structure name (--entry)");
    if (opt.command == "validate") {
      out.exit_code = cmd_validate(opt, *doc, out.report);
    } else if (opt.command == "classify") {
      out.exit_code = cmd_classify(opt, *doc, out.report);
    } else if (opt.command == "obstruction") {
      out.exit_code = cmd_obstruction(opt, *doc, out.report);
    } else if (opt.command == "brackets") {
      out.exit_code = cmd_brackets(opt, *doc, out.report);
    } else if (opt.command == "deform") {
      out.exit_code = cmd_deform(opt, *doc, out.report);
    } else if (opt.command == "extend") {
      out.exit_code = cmd_extend(opt, *doc, out.report);
    } else {
      throw Error(ErrorKind::Parse, "UnknownCommand", "command '" + opt.command + "'");
    }
  } catch (const Error& e) {
    out.report.put("error", e.what());
    out.exit_code = exit_code_for(e);
  } catch (const std::exception& e) {
    out.report.put("error", e.what());
    out.exit_code = kInternalError;
  }
  attach_timing();
  return out;
}

}  // namespace gcx::runner
