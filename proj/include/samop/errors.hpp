#pragma once

#include <stdexcept>
#include <string>

namespace samop {

// Every failure the engine can report deliberately. Parse errors carry a
// position; everything else is a plain message. The CLI maps kinds to exit
// codes (math infeasibility -> 1, parse/usage -> 2).
enum class ErrorKind {
  NotGraphExpressible,
  UnsupportedForLambda,
  Unrepresentable,
  NotSemiFredholm,
  NotUpperSemiBrowder,
  NotLowerSemiBrowder,
  IndexOutOfSpace,
  InvalidWitness,
  Infeasible,
  ArityDomain,
  Parse,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // Parse and arity/domain problems are usage errors; the rest are
  // mathematical infeasibilities of the requested computation.
  bool is_usage_error() const {
    return kind_ == ErrorKind::Parse || kind_ == ErrorKind::ArityDomain ||
           kind_ == ErrorKind::IndexOutOfSpace || kind_ == ErrorKind::InvalidWitness;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace samop
