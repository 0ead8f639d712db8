#pragma once

#include <algorithm>
#include <string>

#include "nvlogic/errors.hpp"

namespace nvl {

/// A closed subinterval of [0,1]. Scalars are degenerate intervals (lo == hi),
/// so one type carries both crisp and interval-valued truth components.
class UnitInterval {
public:
  /// Zero scalar.
  UnitInterval() = default;

  /// Scalar value; implicit so plain doubles read naturally at call sites.
  UnitInterval(double x) : UnitInterval(x, x) {}

  UnitInterval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo >= 0.0) || !(hi <= 1.0) || !(lo <= hi)) {
      throw OutOfRange("interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "] is not a valid subinterval of [0,1]");
    }
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  bool is_scalar() const { return lo_ == hi_; }

  friend bool operator==(const UnitInterval&, const UnitInterval&) = default;

private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

namespace detail {

/// Clamp an op result that is mathematically inside [0,1] but may have
/// drifted out by a rounding step.
inline double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

/// Accept values that overshoot 1 by accumulated rounding only; anything
/// genuinely above 1 is a real range violation for the caller to name.
inline bool snap_unit(double& x) {
  if (x > 1.0) {
    if (x > 1.0 + 1e-14) return false;
    x = 1.0;
  }
  if (x < 0.0) x = 0.0;
  return true;
}

}  // namespace detail

}  // namespace nvl
