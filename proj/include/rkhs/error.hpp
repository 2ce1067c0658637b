#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rkhs {

enum class ErrorKind {
  input,            // malformed or non-finite input
  domain,           // argument outside the kernel / formula domain
  not_positive_definite,
  non_convergence,  // series truncation cap reached
  contract,         // caller violated an operation contract
  range,            // parameter outside supported range
  precondition,     // numerical precondition not met (e.g. grid edge decay)
  config,           // CLI / configuration parse error
  io,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every library failure. The kind is stable and is what
/// the CLI reports in its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class NotPositiveDefiniteError : public Error {
 public:
  NotPositiveDefiniteError(std::size_t pivot, double value)
      : Error(ErrorKind::not_positive_definite,
              "matrix is not positive definite: pivot " + std::to_string(pivot) +
                  " = " + std::to_string(value)),
        pivot_(pivot),
        value_(value) {}

  std::size_t pivot() const noexcept { return pivot_; }
  double pivot_value() const noexcept { return value_; }

 private:
  std::size_t pivot_;
  double value_;
};

class NonConvergenceError : public Error {
 public:
  /// `parameter` is q for Mittag-Leffler and p for Touchard kernels.
  NonConvergenceError(const std::string& kernel, double abs_argument, double parameter,
                      int terms)
      : Error(ErrorKind::non_convergence,
              kernel + " series did not converge after " + std::to_string(terms) +
                  " terms (|z conj(w)| = " + std::to_string(abs_argument) +
                  ", parameter = " + std::to_string(parameter) + ")"),
        abs_argument_(abs_argument),
        parameter_(parameter) {}

  double abs_argument() const noexcept { return abs_argument_; }
  double parameter() const noexcept { return parameter_; }

 private:
  double abs_argument_;
  double parameter_;
};

class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& message, double measured)
      : Error(ErrorKind::precondition, message + " (measured " + std::to_string(measured) + ")"),
        measured_(measured) {}

  double measured() const noexcept { return measured_; }

 private:
  double measured_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace rkhs
