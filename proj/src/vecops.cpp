#include "choqlab/vecops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "choqlab/errors.hpp"

namespace choqlab {

namespace {

Vec map_components(std::span<const double> x, double (*op)(double, double), double c) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = op(x[i], c);
  return out;
}

}  // namespace

Vec meet_scalar(std::span<const double> x, double c) {
  return map_components(x, [](double v, double c) { return std::min(v, c); }, c);
}

Vec join_scalar(std::span<const double> x, double c) {
  return map_components(x, [](double v, double c) { return std::max(v, c); }, c);
}

Vec cut_above(std::span<const double> x, double c) {
  return map_components(x, [](double v, double c) { return v <= c ? 0.0 : v - c; }, c);
}

Vec cut_below(std::span<const double> x, double c) {
  return map_components(x, [](double v, double c) { return v >= c ? 0.0 : v - c; }, c);
}

Vec med_clamp(std::span<const double> x, double c) {
  if (c < 0.0 || std::isnan(c)) {
    throw NegativeCutError("med_clamp needs a nonnegative cut level, got " + std::to_string(c));
  }
  return map_components(
      x, [](double v, double c) { return std::min(std::max(v, -c), c); }, c);
}

Vec pos_part(std::span<const double> x) {
  return map_components(x, [](double v, double) { return v > 0.0 ? v : 0.0; }, 0.0);
}

Vec neg_part(std::span<const double> x) {
  return map_components(x, [](double v, double) { return v < 0.0 ? -v : 0.0; }, 0.0);
}

bool are_comonotonic(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DimensionError("comonotonicity needs vectors of equal length, got " +
                         std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if ((x[i] - x[j]) * (y[i] - y[j]) < 0.0) return false;
    }
  }
  return true;
}

namespace {

SortChain build_chain(std::span<const double> x, std::vector<int> sigma) {
  const int n = static_cast<int>(x.size());
  SortChain chain;
  chain.sigma = std::move(sigma);
  chain.upper.assign(n + 1, 0);
  chain.lower.assign(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    chain.upper[i] = chain.upper[i + 1] | (std::uint32_t(1) << chain.sigma[i]);
  }
  for (int i = 0; i < n; ++i) {
    chain.lower[i + 1] = chain.lower[i] | (std::uint32_t(1) << chain.sigma[i]);
  }
  chain.split = 0;
  for (double v : x) {
    if (v < 0.0) ++chain.split;
  }
  return chain;
}

}  // namespace

SortChain sort_chain(std::span<const double> x) {
  if (x.empty() || x.size() > 32) {
    throw DimensionError("sort_chain needs between 1 and 32 components");
  }
  for (double v : x) {
    if (std::isnan(v)) throw ValueError("sort_chain got a NaN component");
  }
  std::vector<int> sigma(x.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::stable_sort(sigma.begin(), sigma.end(), [&](int a, int b) { return x[a] < x[b]; });
  return build_chain(x, std::move(sigma));
}

SortChain sort_chain(std::span<const double> x, std::span<const int> sigma) {
  if (sigma.size() != x.size()) {
    throw DimensionError("permutation length does not match vector length");
  }
  std::vector<bool> seen(x.size(), false);
  for (int p : sigma) {
    if (p < 0 || std::size_t(p) >= x.size() || seen[p]) {
      throw ValueError("sigma is not a permutation of the component indices");
    }
    seen[p] = true;
  }
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    if (x[sigma[i]] > x[sigma[i + 1]]) {
      throw ValueError("sigma does not sort the vector nondecreasingly");
    }
  }
  return build_chain(x, std::vector<int>(sigma.begin(), sigma.end()));
}

DomainSpec DomainSpec::full_line() {
  const double inf = std::numeric_limits<double>::infinity();
  return DomainSpec(Kind::full_line, -inf, inf);
}

DomainSpec DomainSpec::nonneg() {
  return DomainSpec(Kind::nonneg, 0.0, std::numeric_limits<double>::infinity());
}

DomainSpec DomainSpec::nonpos() {
  return DomainSpec(Kind::nonpos, -std::numeric_limits<double>::infinity(), 0.0);
}

DomainSpec DomainSpec::centered(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw ValueError("centered domain needs a positive finite radius");
  }
  return DomainSpec(Kind::centered, -a, a);
}

DomainSpec DomainSpec::box(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo <= 0.0) || !(0.0 <= hi) || !(lo < hi)) {
    throw ValueError("box domain needs finite lo <= 0 <= hi with lo < hi");
  }
  return DomainSpec(Kind::box, lo, hi);
}

bool DomainSpec::contains(std::span<const double> x) const {
  for (double v : x) {
    if (!contains(v)) return false;
  }
  return true;
}

bool in_domain(double t, const DomainSpec& d) { return d.contains(t); }

bool in_domain(std::span<const double> x, const DomainSpec& d) { return d.contains(x); }

}  // namespace choqlab
