#include "choqlab/setfn.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "choqlab/errors.hpp"
#include "choqlab/rng.hpp"

namespace choqlab {

SetFunction::SetFunction(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  if (n_ < 1 || n_ > 16) {
    throw DimensionError("set function arity must be between 1 and 16, got " + std::to_string(n_));
  }
  const std::size_t want = std::size_t(1) << n_;
  if (values_.size() != want) {
    throw DimensionError("set function over " + std::to_string(n_) + " elements needs " +
                         std::to_string(want) + " values, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw ValueError("set function values must be finite");
  }
}

SetFunction make_set_function(int n, std::vector<double> values) {
  return SetFunction(n, std::move(values));
}

bool is_capacity(const SetFunction& phi) {
  if (phi[0] != 0.0) return false;
  const std::uint32_t count = phi.subset_count();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    for (int i = 0; i < phi.n(); ++i) {
      const std::uint32_t bit = std::uint32_t(1) << i;
      if (mask & bit) continue;
      if (phi[mask | bit] < phi[mask]) return false;
    }
  }
  return true;
}

MobiusRepresentation mobius_transform(const SetFunction& phi) {
  MobiusRepresentation m{phi.n(), phi.values()};
  const std::uint32_t count = phi.subset_count();
  for (int i = 0; i < m.n; ++i) {
    const std::uint32_t bit = std::uint32_t(1) << i;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      if (mask & bit) m.coefficients[mask] -= m.coefficients[mask ^ bit];
    }
  }
  return m;
}

SetFunction zeta_transform(const MobiusRepresentation& m) {
  if (m.n < 1 || m.n > 16 || m.coefficients.size() != (std::size_t(1) << m.n)) {
    throw DimensionError("mobius representation has inconsistent arity");
  }
  std::vector<double> values = m.coefficients;
  const std::uint32_t count = std::uint32_t(1) << m.n;
  for (int i = 0; i < m.n; ++i) {
    const std::uint32_t bit = std::uint32_t(1) << i;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      if (mask & bit) values[mask] += values[mask ^ bit];
    }
  }
  return SetFunction(m.n, std::move(values));
}

SetFunction random_set_function(int n, std::uint64_t seed, SetFunctionKind kind) {
  if (n < 1 || n > 16) {
    throw DimensionError("set function arity must be between 1 and 16, got " + std::to_string(n));
  }
  Rng rng(Rng::mix(seed, (std::uint64_t(n) << 8) | std::uint64_t(kind)));
  const std::uint32_t count = std::uint32_t(1) << n;
  std::vector<double> values(count, 0.0);

  if (kind == SetFunctionKind::general) {
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      values[mask] = rng.uniform(-1.0, 1.0);
    }
    return SetFunction(n, std::move(values));
  }

  // Visit subsets level by level in a shuffled order; any such order is
  // a linear extension of the inclusion order, so adding a positive
  // increment over the largest predecessor keeps the result monotone.
  std::vector<std::uint32_t> order;
  order.reserve(count - 1);
  for (int level = 1; level <= n; ++level) {
    const std::size_t level_begin = order.size();
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      if (std::popcount(mask) == level) order.push_back(mask);
    }
    for (std::size_t i = order.size() - 1; i > level_begin; --i) {
      const std::size_t j = level_begin + rng.below(i - level_begin + 1);
      std::swap(order[i], order[j]);
    }
  }
  for (std::uint32_t mask : order) {
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
      const std::uint32_t bit = std::uint32_t(1) << i;
      if (mask & bit) best = std::max(best, values[mask ^ bit]);
    }
    values[mask] = best + (1.0 - rng.uniform01());  // increment in (0, 1]
  }
  if (kind == SetFunctionKind::capacity_normalized) {
    const double top = values[count - 1];
    for (std::uint32_t mask = 1; mask < count; ++mask) values[mask] /= top;
    values[count - 1] = 1.0;
  }
  return SetFunction(n, std::move(values));
}

}  // namespace choqlab
