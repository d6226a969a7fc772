#include "choqlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "choqlab/errors.hpp"
#include "choqlab/lovasz.hpp"
#include "choqlab/tolerance.hpp"

namespace choqlab {

double AffineRegion::value(std::span<const double> x) const {
  double acc = coefficients.at(0);
  for (std::size_t j = 0; j < x.size(); ++j) acc += coefficients[j + 1] * x[j];
  return acc;
}

AffineRegion affine_region(const SetFunction& phi, std::span<const double> x) {
  const int n = phi.n();
  if (n > 10) throw DimensionError("affine interpolation oracle is capped at n <= 10");
  if (int(x.size()) != n) throw DimensionError("vector length does not match the set function");

  const SortChain chain = sort_chain(x);
  const int m = n + 1;

  // Row k interpolates the vertex 1_{upper[k]}; upper[n] is the empty
  // set, i.e. the origin.  Unknowns are (a0, a1..an).
  std::vector<std::vector<double>> sys(std::size_t(m), std::vector<double>(std::size_t(m) + 1, 0.0));
  for (int k = 0; k <= n; ++k) {
    const std::uint32_t mask = chain.upper[std::size_t(k)];
    sys[k][0] = 1.0;
    for (int j = 0; j < n; ++j) {
      if (mask & (std::uint32_t(1) << j)) sys[k][std::size_t(j) + 1] = 1.0;
    }
    sys[k][std::size_t(m)] = phi[mask];
  }

  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int r = col + 1; r < m; ++r) {
      if (std::fabs(sys[r][col]) > std::fabs(sys[pivot][col])) pivot = r;
    }
    if (std::fabs(sys[pivot][col]) < 1e-12) {
      throw SingularSystem("vertex interpolation system is singular");
    }
    std::swap(sys[std::size_t(col)], sys[std::size_t(pivot)]);
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      const double factor = sys[r][col] / sys[col][col];
      if (factor == 0.0) continue;
      for (int c = col; c <= m; ++c) sys[r][c] -= factor * sys[col][c];
    }
  }

  AffineRegion region;
  region.sigma = chain.sigma;
  region.coefficients.resize(std::size_t(m));
  for (int i = 0; i < m; ++i) region.coefficients[i] = sys[i][std::size_t(m)] / sys[i][i];
  return region;
}

double eval_affine_interpolation(const SetFunction& phi, std::span<const double> x) {
  return affine_region(phi, x).value(x);
}

double eval_via_mobius(const MobiusRepresentation& m, std::span<const double> x) {
  if (int(x.size()) != m.n) throw DimensionError("vector length does not match the coefficients");
  double acc = m.coefficients.at(0);
  const std::uint32_t count = std::uint32_t(1) << m.n;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    double least = std::numeric_limits<double>::infinity();
    for (int j = 0; j < m.n; ++j) {
      if (mask & (std::uint32_t(1) << j)) least = std::min(least, x[std::size_t(j)]);
    }
    acc += m.coefficients[mask] * least;
  }
  return acc;
}

double eval_via_mobius(const SetFunction& phi, std::span<const double> x) {
  return eval_via_mobius(mobius_transform(phi), x);
}

namespace {

// Lexicographic odometer over grid^n, first component most
// significant; stops when the callback returns false.
template <typename Yield>
bool sweep_vectors(const std::vector<double>& grid, int n, Yield&& yield) {
  if (grid.empty()) return true;
  std::vector<std::size_t> idx(std::size_t(n), 0);
  Vec x(std::size_t(n), grid[0]);
  for (;;) {
    if (!yield(std::as_const(x))) return false;
    int pos = n - 1;
    while (pos >= 0) {
      if (++idx[pos] < grid.size()) {
        x[pos] = grid[idx[pos]];
        break;
      }
      idx[pos] = 0;
      x[pos] = grid[0];
      --pos;
    }
    if (pos < 0) return true;
  }
}

double raw_instances(const std::vector<double>& grid, const std::vector<double>& pos,
                     const std::vector<double>& neg, int n, Axiom axiom) {
  const double g = double(grid.size());
  const double gp = double(pos.size());
  const double gn = double(neg.size());
  switch (axiom) {
    case Axiom::comonotonic: return std::pow(g, 2 * n);
    case Axiom::positive_comonotonic: return std::pow(gp, 2 * n);
    case Axiom::negative_comonotonic: return std::pow(gn, 2 * n);
    case Axiom::horizontal_min:
    case Axiom::horizontal_max:
    case Axiom::homogeneity: return std::pow(g, n) * g;
    case Axiom::horizontal_median: return std::pow(g, n) * gp;
    case Axiom::positive_horizontal_min: return std::pow(gp, n) * gp;
    case Axiom::negative_horizontal_max: return std::pow(gn, n) * gn;
    case Axiom::splitting: return std::pow(g, n);
    case Axiom::oddness_positive: return std::pow(gp, n);
    case Axiom::diagonal:
      return std::ldexp(1.0, n) * (gp * gp + gn * gn + g * g) + gp;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace

Verdict brute_force_axiom_sweep(const RealFn& f, int n, std::vector<double> grid, Axiom axiom) {
  if (n < 1 || n > 16) throw DimensionError("sweep needs 1 <= n <= 16");
  for (double v : grid) {
    if (!std::isfinite(v)) throw ValueError("grid values must be finite");
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty()) throw ValueError("grid must not be empty");

  std::vector<double> pos, neg;
  for (double v : grid) {
    if (v >= 0.0) pos.push_back(v);
    if (v <= 0.0) neg.push_back(v);
  }

  if (raw_instances(grid, pos, neg, n, axiom) > 1e7) {
    throw BudgetExceeded("sweep would exceed 10^7 instances");
  }

  const Tolerance tol{};
  std::uint64_t count = 0;
  std::optional<Witness> found;

  const auto test = [&](const Vec& x, const Vec& x2, std::optional<double> cut, double lhs,
                        double rhs, const char* note) {
    ++count;
    if (!tol.violates(lhs, rhs)) return true;
    Witness w;
    w.x = x;
    w.x2 = x2;
    w.cut = cut;
    w.lhs = lhs;
    w.rhs = rhs;
    w.gap = tol.gap(lhs, rhs);
    w.note = note;
    found = std::move(w);
    return false;
  };

  const Vec none;

  const auto comonotonic_pairs = [&](const std::vector<double>& vals) {
    sweep_vectors(vals, n, [&](const Vec& x) {
      return sweep_vectors(vals, n, [&](const Vec& x2) {
        if (!are_comonotonic(x, x2)) return true;
        Vec sum(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + x2[i];
        return test(x, x2, std::nullopt, f(sum), f(x) + f(x2), "");
      });
    });
  };

  switch (axiom) {
    case Axiom::comonotonic: comonotonic_pairs(grid); break;
    case Axiom::positive_comonotonic: comonotonic_pairs(pos); break;
    case Axiom::negative_comonotonic: comonotonic_pairs(neg); break;

    case Axiom::horizontal_min:
    case Axiom::positive_horizontal_min: {
      const auto& vals = axiom == Axiom::horizontal_min ? grid : pos;
      sweep_vectors(vals, n, [&](const Vec& x) {
        for (double c : vals) {
          if (!test(x, none, c, f(x), f(meet_scalar(x, c)) + f(cut_above(x, c)), "")) {
            return false;
          }
        }
        return true;
      });
      break;
    }

    case Axiom::horizontal_max:
    case Axiom::negative_horizontal_max: {
      const auto& vals = axiom == Axiom::horizontal_max ? grid : neg;
      sweep_vectors(vals, n, [&](const Vec& x) {
        for (double c : vals) {
          if (!test(x, none, c, f(x), f(join_scalar(x, c)) + f(cut_below(x, c)), "")) {
            return false;
          }
        }
        return true;
      });
      break;
    }

    case Axiom::horizontal_median:
      sweep_vectors(grid, n, [&](const Vec& x) {
        for (double c : pos) {
          const double rhs =
              f(med_clamp(x, c)) + f(cut_above(x, c)) + f(cut_below(x, -c));
          if (!test(x, none, c, f(x), rhs, "")) return false;
        }
        return true;
      });
      break;

    case Axiom::splitting:
      sweep_vectors(grid, n, [&](const Vec& x) {
        Vec down(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) down[i] = std::min(x[i], 0.0);
        return test(x, none, std::nullopt, f(x), f(pos_part(x)) + f(down), "");
      });
      break;

    case Axiom::homogeneity:
      sweep_vectors(grid, n, [&](const Vec& x) {
        for (double c : grid) {
          Vec scaled(x.size());
          for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = c * x[i];
          if (!test(x, none, c, f(scaled), c * f(x), "")) return false;
        }
        return true;
      });
      break;

    case Axiom::oddness_positive: {
      const double base = f(Vec(std::size_t(n), 0.0));
      sweep_vectors(pos, n, [&](const Vec& x) {
        Vec mirrored(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) mirrored[i] = -x[i];
        return test(x, none, std::nullopt, f(mirrored) - base, -(f(x) - base), "");
      });
      break;
    }

    case Axiom::diagonal: {
      const std::uint32_t subsets = std::uint32_t(1) << n;
      const auto section_pairs = [&](std::uint32_t subset, const std::vector<double>& vals,
                                     const char* note) {
        for (double t : vals) {
          for (double t2 : vals) {
            const double lhs = diagonal_section(f, n, subset, t + t2);
            const double rhs =
                diagonal_section(f, n, subset, t) + diagonal_section(f, n, subset, t2);
            if (!test({t}, {t2}, std::nullopt, lhs, rhs, note)) return false;
          }
        }
        return true;
      };
      bool keep = true;
      for (std::uint32_t subset = 0; keep && subset < subsets; ++subset) {
        keep = section_pairs(subset, pos, "section additivity, nonnegative side") &&
               section_pairs(subset, neg, "section additivity, nonpositive side") &&
               section_pairs(subset, grid, "section additivity, both signs");
      }
      if (keep) {
        const std::uint32_t full = subsets - 1;
        for (double t : pos) {
          const double lhs = diagonal_section(f, n, full, -t);
          const double rhs = -diagonal_section(f, n, full, t);
          if (!test({t}, none, std::nullopt, lhs, rhs, "full diagonal oddness")) break;
        }
      }
      break;
    }
  }

  Verdict verdict;
  verdict.seed = 0;
  verdict.trials = count;
  verdict.passed = !found.has_value();
  verdict.witness = std::move(found);
  return verdict;
}

}  // namespace choqlab
