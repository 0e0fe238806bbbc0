#pragma once

#include <stdexcept>
#include <string>

namespace specbound {

enum class ErrorCode {
  InvalidArgument,
  Dimension,
  NotHermitian,
  NoConvergence,
  Io,
  Parse,
  Unsupported,
  Degenerate,
  Numerical,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the core carries a category so the C layer can map
// it onto a status code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the Jacobi kernel when the sweep cap is hit.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double off_diagonal_mass)
      : Error(ErrorCode::NoConvergence, what), residual_(off_diagonal_mass) {}

  double off_diagonal_mass() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace specbound
