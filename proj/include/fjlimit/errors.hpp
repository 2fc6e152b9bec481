#pragma once

#include <stdexcept>
#include <string>

namespace fjlimit {

// Iterative solve hit its iteration cap; carries the last iterate and the
// residual it stalled at.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_value, double residual)
      : std::runtime_error(what), last_value(last_value), residual(residual) {}

  double last_value;
  double residual;
};

// A run would exceed the configured work budget (server-job updates or
// grid cells times replications).
class BudgetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numeric routine could not reach its accuracy target.
class NumericError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fjlimit
