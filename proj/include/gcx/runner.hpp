#pragma once

#include <map>
#include <optional>
#include <string>

#include "gcx/dsl.hpp"
#include "gcx/report.hpp"

namespace gcx::runner {

using exactnum::GaussRational;

// Exit codes per error family.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kParseError = 2;
inline constexpr int kValidationError = 3;
inline constexpr int kExpectationMismatch = 4;
inline constexpr int kPreconditionError = 5;

struct Options {
  std::string command;  // validate | classify | obstruction | brackets | deform |
                        // extend | darboux | catalog
  std::string entry;    // structure/algebra/catalog-entry name
  std::string omega;    // extend: 2-form expression
  std::string lift;     // extend: structure to lift
  std::string gamma;    // deform: wedge of two generalized sections
  std::string t = "1";  // deform: scale parameter literal
  int darboux_n = 1;
  std::string catalog_action = "run";  // list | run
  std::map<std::string, GaussRational> params;
  // wall-clock timing in the report; off by default so renders stay
  // byte-identical across runs
  bool include_timing = false;
};

struct Outcome {
  int exit_code = kOk;
  report::Node report{"report"};
};

// Executes one command against a parsed document (may be null for darboux and
// catalog). Never throws; failures are encoded in the exit code and report.
Outcome run_command(const Options& options, const dsl::Document* doc);

int exit_code_for(const Error& e);

}  // namespace gcx::runner
