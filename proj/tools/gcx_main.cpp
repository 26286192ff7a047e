#include <CLI11.hpp>
#include <iostream>

#include "gcx/runner.hpp"

namespace {

using gcx::runner::Options;

// mutable per-subcommand state; lives for the whole program so CLI11 option
// bindings stay valid
struct SubState {
  CLI::App* cmd = nullptr;
  bool needs_doc = true;
  std::string file;
  std::string entry;
  std::string format = "text";
  std::vector<std::string> params;
  std::string gamma;
  std::string t = "1";
  std::string omega;
  std::string lift;
  int darboux_n = 1;
  std::string action = "run";
};

std::map<std::string, gcx::exactnum::GaussRational> parse_params(
    const std::vector<std::string>& kvs) {
  std::map<std::string, gcx::exactnum::GaussRational> out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw gcx::Error(gcx::ErrorKind::Parse, "BadParam", "--param expects k=v, got " + kv);
    out[kv.substr(0, eq)] = gcx::exactnum::GaussRational::parse(kv.substr(eq + 1));
  }
  return out;
}

void add_common(SubState& s, bool with_file) {
  if (with_file) s.cmd->add_option("file", s.file, "input .gcx document")->required();
  s.cmd->add_option("--entry", s.entry, "structure or entry name");
  s.cmd->add_option("--format", s.format, "text | json-like-tree");
  s.cmd->add_option("--param", s.params, "rational parameter k=v (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with invariant generalized contact structures"};
  app.require_subcommand(1);

  std::map<std::string, SubState> subs;
  for (const char* name : {"validate", "classify", "obstruction", "brackets"}) {
    SubState& s = subs[name];
    s.cmd = app.add_subcommand(name, std::string(name) + " a structure from a document");
    add_common(s, true);
  }
  {
    SubState& s = subs["deform"];
    s.cmd = app.add_subcommand("deform", "graph deformation along a Maurer-Cartan solution");
    add_common(s, true);
    s.cmd->add_option("--gamma", s.gamma, "wedge of two generalized sections")->required();
    s.cmd->add_option("--t", s.t, "scale parameter (Gaussian rational literal)");
  }
  {
    SubState& s = subs["extend"];
    s.cmd = app.add_subcommand("extend", "central extension by a closed 2-form");
    add_common(s, true);
    s.cmd->add_option("--omega", s.omega, "closed 2-form on the base algebra")->required();
    s.cmd->add_option("--lift", s.lift, "complex structure to lift");
  }
  {
    SubState& s = subs["darboux"];
    s.cmd = app.add_subcommand("darboux", "verify the local contact model");
    s.needs_doc = false;
    s.cmd->add_option("--n", s.darboux_n, "number of (x, y) pairs (1..3)");
    s.cmd->add_option("--format", s.format, "text | json-like-tree");
  }
  {
    SubState& s = subs["catalog"];
    s.cmd = app.add_subcommand("catalog", "run or list the built-in examples");
    s.needs_doc = false;
    s.cmd->add_option("action", s.action, "list | run");
    s.cmd->add_option("name", s.entry, "entry name (default: all)");
    s.cmd->add_option("--format", s.format, "text | json-like-tree");
    s.cmd->add_option("--param", s.params, "rational parameter k=v (repeatable)");
  }

  CLI11_PARSE(app, argc, argv);

  for (auto& [name, s] : subs) {
    if (!s.cmd->parsed()) continue;
    Options opt;
    opt.command = name;
    opt.entry = s.entry;
    opt.gamma = s.gamma;
    opt.t = s.t;
    opt.omega = s.omega;
    opt.lift = s.lift;
    opt.darboux_n = s.darboux_n;
    opt.catalog_action = s.action;
    opt.include_timing = true;
    try {
      opt.params = parse_params(s.params);
      if (name == "catalog" && s.action != "list" && s.action != "run")
        throw gcx::Error(gcx::ErrorKind::Parse, "BadAction",
                         "catalog action must be list or run");
      gcx::report::Format fmt = gcx::report::parse_format(s.format);
      gcx::runner::Outcome out;
      if (s.needs_doc) {
        gcx::dsl::Document doc = gcx::dsl::parse_file(s.file);
        out = gcx::runner::run_command(opt, &doc);
      } else {
        out = gcx::runner::run_command(opt, nullptr);
      }
      std::cout << gcx::report::render(out.report, fmt);
      return out.exit_code;
    } catch (const gcx::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return gcx::runner::exit_code_for(e);
    }
  }
  return 0;
}
