#pragma once

#include <stdexcept>
#include <string>

namespace gcx {

// Error families map onto distinct CLI exit codes (see report.hpp).
enum class ErrorKind {
  Parse,          // DSL syntax / unknown symbol / dimension mismatch in input
  Validation,     // structural axioms fail on supplied data
  Precondition,   // an operation was called outside its domain
  Expectation,    // a catalog expectation did not match
  Internal,       // a mathematical identity the code relies on broke
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), kind_(kind), name_(std::move(name)) {}
  ErrorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

inline Error dimension_mismatch(const std::string& what) {
  return Error(ErrorKind::Precondition, "DimensionMismatch", what);
}

}  // namespace gcx
