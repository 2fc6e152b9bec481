#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fjlimit {

enum class SlowKind { kConstant, kLogFloor, kExpSqrtLog };

// Slowly varying factor L(x): L(lambda*x)/L(x) -> 1 as x -> inf for every
// fixed lambda > 0. Three kinds ship:
//   Constant(c)   L(x) = c, c > 0
//   LogFloor      L(x) = max(log x, 1)
//   ExpSqrtLog    L(x) = exp(sqrt(log x)) for x >= 1, else 1
struct SlowlyVarying {
  SlowKind kind = SlowKind::kConstant;
  double c = 1.0;  // Constant kind only

  static SlowlyVarying constant(double value) {
    if (!(value > 0.0))
      throw std::invalid_argument("SlowlyVarying: constant must be > 0");
    return {SlowKind::kConstant, value};
  }
  static SlowlyVarying log_floor() { return {SlowKind::kLogFloor, 1.0}; }
  static SlowlyVarying exp_sqrt_log() { return {SlowKind::kExpSqrtLog, 1.0}; }

  double operator()(double x) const {
    switch (kind) {
      case SlowKind::kConstant:
        return c;
      case SlowKind::kLogFloor:
        return std::max(std::log(x), 1.0);
      case SlowKind::kExpSqrtLog:
        return x >= 1.0 ? std::exp(std::sqrt(std::log(x))) : 1.0;
    }
    throw std::logic_error("SlowlyVarying: unknown kind");
  }

  // Spec strings: "const:<c>", "log", "expsqrtlog".
  static SlowlyVarying parse(const std::string& text) {
    if (text == "log") return log_floor();
    if (text == "expsqrtlog") return exp_sqrt_log();
    if (text.rfind("const:", 0) == 0) {
      std::size_t used = 0;
      const std::string num = text.substr(6);
      const double value = std::stod(num, &used);
      if (used != num.size())
        throw std::invalid_argument("SlowlyVarying: bad constant in '" + text + "'");
      return constant(value);
    }
    throw std::invalid_argument("SlowlyVarying: unknown kind '" + text +
                                "' (expected const:<c>, log, expsqrtlog)");
  }

  std::string to_string() const {
    switch (kind) {
      case SlowKind::kConstant: {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "const:%.17g", c);
        return buf;
      }
      case SlowKind::kLogFloor:
        return "log";
      case SlowKind::kExpSqrtLog:
        return "expsqrtlog";
    }
    throw std::logic_error("SlowlyVarying: unknown kind");
  }

  friend bool operator==(const SlowlyVarying& a, const SlowlyVarying& b) {
    return a.kind == b.kind && (a.kind != SlowKind::kConstant || a.c == b.c);
  }
};

}  // namespace fjlimit
