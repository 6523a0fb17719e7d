#pragma once

#include <stdexcept>
#include <string>

namespace stirap {

/// Base for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range scenario configuration. The CLI maps this to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Integration accuracy loss, eigensolver non-convergence, or a failed
/// physical precondition discovered after a run (e.g. transfer did not
/// happen). The CLI maps this to exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a closed-form expression.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double value) : Error(what), value_(value) {}
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// A stated precondition (e.g. the null-eigenvalue condition) does not hold.
/// `residual` quantifies how far the inputs are from satisfying it.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Caller broke an API contract (e.g. passed a non-symmetric matrix).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stirap
