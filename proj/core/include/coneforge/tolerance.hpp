#pragma once

#include <algorithm>
#include <cmath>

namespace coneforge {

/// Mixed absolute/relative comparison: |a-b| <= abs + rel * max(|a|,|b|).
struct Tolerance {
  double abs = 1e-10;
  double rel = 1e-9;

  bool close(double a, double b) const {
    return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
  }
  /// Same bound for a residual measured against a reference magnitude.
  bool accepts(double residual, double scale) const {
    return residual <= abs + rel * std::abs(scale);
  }
};

}  // namespace coneforge
