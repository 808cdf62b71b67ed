// Error model shared by all gvkit modules.
#pragma once

#include <stdexcept>
#include <string>

namespace gvkit {

enum class ErrorKind {
  InvalidTruncation,    // requested order cannot be represented / is unknown
  SymmetryViolation,    // Q-Laurent input not symmetric under Q -> 1/Q
  UnsupportedBackend,   // operation not defined for the chosen backend
  DomainError,          // argument outside the mathematical domain
  IncompatibleContext,  // lattice rank / area weights disagree
  TruncationUnsound,    // requested window exceeds what the input determines
  IncompleteLocalData,  // local BPS tables do not cover a needed (d, g)
  InternalConsistency,  // an exactness guarantee failed (library bug if seen)
  SchemaError,          // malformed JSON input
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace gvkit
