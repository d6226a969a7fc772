#ifndef CHOQLAB_TOLERANCE_HPP
#define CHOQLAB_TOLERANCE_HPP

#include <algorithm>
#include <cmath>

namespace choqlab {

/// Absolute/relative comparison used by every checker in the library.
/// Two values violate the tolerance iff
///   |lhs - rhs| > abs + rel * max(|lhs|, |rhs|).
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;

  double gap(double lhs, double rhs) const { return std::fabs(lhs - rhs); }

  bool violates(double lhs, double rhs) const {
    return gap(lhs, rhs) > abs + rel * std::max(std::fabs(lhs), std::fabs(rhs));
  }

  bool close(double lhs, double rhs) const { return !violates(lhs, rhs); }
};

}  // namespace choqlab

#endif  // CHOQLAB_TOLERANCE_HPP
