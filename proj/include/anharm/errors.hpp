#pragma once

#include <stdexcept>
#include <string>

namespace anharm {

/// Invalid input: a precondition on parameters or settings was violated.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative procedure stopped before reaching its tolerance.
///
/// Carries the best estimate obtained and a bound on its error so callers can
/// report a degraded result instead of discarding it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

}  // namespace anharm
