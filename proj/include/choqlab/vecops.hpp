#ifndef CHOQLAB_VECOPS_HPP
#define CHOQLAB_VECOPS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace choqlab {

using Vec = std::vector<double>;

/// Black-box real function of a vector; the common currency between
/// extension evaluators, axiom checkers and the brute-force sweeps.
using RealFn = std::function<double(std::span<const double>)>;

/// Componentwise min(x_i, c).
Vec meet_scalar(std::span<const double> x, double c);
/// Componentwise max(x_i, c).
Vec join_scalar(std::span<const double> x, double c);
/// Part of x above the level c: x - (x meet c), componentwise max(x_i - c, 0).
Vec cut_above(std::span<const double> x, double c);
/// Part of x below the level c: x - (x join c), componentwise min(x_i - c, 0).
Vec cut_below(std::span<const double> x, double c);
/// Componentwise median of (-c, x_i, c); requires c >= 0 (NegativeCutError).
Vec med_clamp(std::span<const double> x, double c);
/// Componentwise max(x_i, 0).
Vec pos_part(std::span<const double> x);
/// Componentwise max(-x_i, 0), so that x = pos_part(x) - neg_part(x).
Vec neg_part(std::span<const double> x);

/// True iff (x_i - x_j)(y_i - y_j) >= 0 for every pair i < j, which is
/// equivalent to x and y being sortable by one common permutation.
/// Throws DimensionError on length mismatch.
bool are_comonotonic(std::span<const double> x, std::span<const double> y);

/// Sorting data shared by every telescoping evaluator.
///
/// sigma[i] is the 0-based original index of the (i+1)-th smallest
/// component; ties keep ascending original index (stable).
/// upper[i] is the bitmask of {sigma[i], ..., sigma[n-1]}, upper[n] = 0;
/// lower[i] is the bitmask of {sigma[0], ..., sigma[i-1]}, lower[0] = 0.
/// split is the number of strictly negative components, so components
/// sigma[0..split-1] are < 0 and sigma[split..n-1] are >= 0.
struct SortChain {
  std::vector<int> sigma;
  std::vector<std::uint32_t> upper;
  std::vector<std::uint32_t> lower;
  int split = 0;
};

SortChain sort_chain(std::span<const double> x);

/// Builds the chain for a caller-chosen permutation, which must sort x
/// nondecreasingly (ValueError otherwise).  Lets tests pin down that
/// evaluation does not depend on how ties are broken.
SortChain sort_chain(std::span<const double> x, std::span<const int> sigma);

/// Interval domain containing 0 on which axioms are sampled.
class DomainSpec {
 public:
  enum class Kind { full_line, nonneg, nonpos, centered, box };

  static DomainSpec full_line();
  static DomainSpec nonneg();
  static DomainSpec nonpos();
  /// [-a, a] with a > 0.
  static DomainSpec centered(double a);
  /// [lo, hi] with lo <= 0 <= hi and lo < hi.
  static DomainSpec box(double lo, double hi);

  Kind kind() const { return kind_; }
  /// Lower end, -infinity when unbounded below.
  double lo() const { return lo_; }
  /// Upper end, +infinity when unbounded above.
  double hi() const { return hi_; }

  bool contains(double t) const { return lo_ <= t && t <= hi_; }
  bool contains(std::span<const double> x) const;

  /// Kinds that are symmetric around 0; several axioms are only
  /// defined on these.
  bool symmetric() const {
    return kind_ == Kind::full_line || kind_ == Kind::centered;
  }

 private:
  DomainSpec(Kind kind, double lo, double hi) : kind_(kind), lo_(lo), hi_(hi) {}
  Kind kind_;
  double lo_;
  double hi_;
};

bool in_domain(double t, const DomainSpec& d);
bool in_domain(std::span<const double> x, const DomainSpec& d);

}  // namespace choqlab

#endif  // CHOQLAB_VECOPS_HPP
