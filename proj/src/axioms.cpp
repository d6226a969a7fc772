#include "choqlab/axioms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include "choqlab/errors.hpp"
#include "choqlab/lovasz.hpp"
#include "choqlab/rng.hpp"

namespace choqlab {

namespace {

// Half-width of the sampling box used where the domain itself is
// unbounded; bounded domains are sampled over their true extent.
constexpr double kWindowHalfWidth = 5.0;
// Deterministic lattice sweeps enumerate integer vectors only up to
// this dimension; beyond it the pair enumeration blows up.
constexpr int kSweepMaxDim = 4;

struct Interval {
  double lo;
  double hi;
};

Interval sampling_window(const DomainSpec& d) {
  return {std::isinf(d.lo()) ? -kWindowHalfWidth : d.lo(),
          std::isinf(d.hi()) ? kWindowHalfWidth : d.hi()};
}

// One concrete instance of an axiom: the sampled vector(s) and, where
// the axiom has one, a cut level or scale factor.
struct Case {
  Vec x;
  Vec x2;
  std::optional<double> cut;
};

// A checker is described by three parts: a deterministic sweep
// enumerator (may be empty), a random-case sampler, and the evaluation
// of both sides of the axiom equation for one case.
struct Kernel {
  std::function<void(const std::function<bool(const Case&)>&)> sweep;
  std::function<Case(Rng&)> sample;
  std::function<std::pair<double, double>(const Case&)> eval;
  std::string note;
};

void require_symmetric(const DomainSpec& d, const char* axiom) {
  if (!d.symmetric()) {
    throw DomainKindError(std::string(axiom) +
                          " is only checked on full_line or centered domains");
  }
}

void assert_inside(std::span<const double> xs, const DomainSpec& d, const char* what) {
  for (double v : xs) {
    const double eps = 1e-9 * (1.0 + std::fabs(v));
    if (v < d.lo() - eps || v > d.hi() + eps) {
      throw std::logic_error(std::string("internal sampler error: ") + what +
                             " left the domain");
    }
  }
}

void assert_inside(double v, const DomainSpec& d, const char* what) {
  assert_inside(std::span<const double>(&v, 1), d, what);
}

// Integer lattice values kept inside the domain.
std::vector<double> lattice_values(const DomainSpec& d, int lo, int hi) {
  std::vector<double> g;
  for (int v = lo; v <= hi; ++v) {
    if (d.contains(v)) g.push_back(v);
  }
  return g;
}

// Enumerates grid^n in lexicographic order (first component most
// significant); stops early when yield returns false.
template <typename Yield>
bool for_each_lattice_vector(const std::vector<double>& g, int n, Yield&& yield) {
  if (g.empty() || n <= 0) return true;
  std::vector<std::size_t> idx(std::size_t(n), 0);
  Vec x(std::size_t(n), g[0]);
  for (;;) {
    if (!yield(std::as_const(x))) return false;
    int pos = n - 1;
    while (pos >= 0) {
      if (++idx[pos] < g.size()) {
        x[pos] = g[idx[pos]];
        break;
      }
      idx[pos] = 0;
      x[pos] = g[0];
      --pos;
    }
    if (pos < 0) return true;
  }
}

Vec draw_iid(Rng& rng, int n, Interval w) {
  Vec x(static_cast<std::size_t>(n));
  for (double& v : x) v = rng.uniform(w.lo, w.hi);
  return x;
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(p[i], p[std::size_t(rng.below(std::uint64_t(i) + 1))]);
  }
  return p;
}

// Draws a comonotonic pair (x, x2) with both vectors inside the window
// and the sum inside [sum_lo, sum_hi] componentwise.  x is a sorted
// tuple scattered by a random permutation; x2 is built along the same
// permutation coordinate by coordinate, each value drawn from the exact
// interval the membership and closure conditions allow, so closure
// never has to be rejected after the fact.  Dead ends (an empty
// interval caused by a large jump in x) restart the draw.
std::pair<Vec, Vec> sample_comonotonic_pair(Rng& rng, int n, Interval win, double sum_lo,
                                            double sum_hi) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const std::vector<int> sigma = random_permutation(rng, n);
    Vec sorted = draw_iid(rng, n, win);
    std::sort(sorted.begin(), sorted.end());
    Vec x(static_cast<std::size_t>(n)), x2(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[sigma[i]] = sorted[i];
    bool ok = true;
    double prev = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double lo = std::max({prev, win.lo, sum_lo - sorted[i]});
      const double hi = std::min(win.hi, sum_hi - sorted[i]);
      if (!(lo <= hi)) {
        ok = false;
        break;
      }
      const double v = rng.uniform(lo, hi);
      x2[sigma[i]] = v;
      prev = v;
    }
    if (ok) return {std::move(x), std::move(x2)};
  }
  throw SamplerExhausted("no comonotonic pair satisfying the closure condition after 100 draws");
}

// Shared driver: deterministic sweep first, then index-seeded random
// trials (optionally split across threads; the outcome is the first
// violation by trial index either way).
Verdict run_kernel(const Kernel& kernel, const CheckConfig& cfg, std::uint64_t salt) {
  Verdict verdict;
  verdict.seed = cfg.seed;

  const auto judge = [&](const Case& c) -> std::optional<Witness> {
    const auto [lhs, rhs] = kernel.eval(c);
    if (!cfg.tolerance.violates(lhs, rhs)) return std::nullopt;
    Witness w;
    w.x = c.x;
    w.x2 = c.x2;
    w.cut = c.cut;
    w.lhs = lhs;
    w.rhs = rhs;
    w.gap = cfg.tolerance.gap(lhs, rhs);
    w.note = kernel.note;
    return w;
  };

  std::uint64_t sweep_count = 0;
  if (kernel.sweep) {
    std::optional<Witness> found;
    kernel.sweep([&](const Case& c) {
      ++sweep_count;
      found = judge(c);
      return !found.has_value();
    });
    if (found) {
      verdict.passed = false;
      verdict.witness = std::move(found);
      verdict.trials = sweep_count;
      return verdict;
    }
  }

  const std::uint64_t stream = Rng::mix(cfg.seed, salt);
  const auto run_trial = [&](std::uint64_t index) -> std::optional<Witness> {
    Rng rng(Rng::mix(stream, index + 1));
    return judge(kernel.sample(rng));
  };

  std::optional<std::pair<std::uint64_t, Witness>> failure;
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1 || cfg.trials < 2) {
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
      if (auto w = run_trial(t)) {
        failure.emplace(t, std::move(*w));
        break;
      }
    }
  } else {
    const std::uint64_t chunk = (cfg.trials + std::uint64_t(jobs) - 1) / std::uint64_t(jobs);
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    std::vector<std::optional<std::pair<std::uint64_t, Witness>>> local(static_cast<std::size_t>(jobs));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    workers.reserve(std::size_t(jobs));
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w]() {
        const std::uint64_t begin = std::uint64_t(w) * chunk;
        const std::uint64_t end = std::min(cfg.trials, begin + chunk);
        try {
          for (std::uint64_t t = begin; t < end; ++t) {
            if (best.load(std::memory_order_relaxed) < t) return;
            if (auto wit = run_trial(t)) {
              local[std::size_t(w)].emplace(t, std::move(*wit));
              std::uint64_t cur = best.load(std::memory_order_relaxed);
              while (t < cur && !best.compare_exchange_weak(cur, t)) {
              }
              return;
            }
          }
        } catch (...) {
          errors[std::size_t(w)] = std::current_exception();
        }
      });
    }
    for (auto& th : workers) th.join();
    for (const auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
    for (const auto& res : local) {
      if (res && (!failure || res->first < failure->first)) failure = res;
    }
  }

  if (failure) {
    verdict.passed = false;
    verdict.trials = sweep_count + failure->first + 1;
    verdict.witness = std::move(failure->second);
  } else {
    verdict.trials = sweep_count + cfg.trials;
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Kernels for the individual axioms.

Vec component_sum(const Vec& a, const Vec& b) {
  Vec s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

Kernel comonotonic_kernel(const RealFn& f, int n, const DomainSpec& domain, Interval win,
                          double sum_lo, double sum_hi, const std::vector<double>& grid) {
  Kernel k;
  if (n <= kSweepMaxDim && !grid.empty()) {
    k.sweep = [grid, n, domain, sum_lo, sum_hi](const std::function<bool(const Case&)>& yield) {
      for_each_lattice_vector(grid, n, [&](const Vec& x) {
        return for_each_lattice_vector(grid, n, [&](const Vec& x2) {
          if (!are_comonotonic(x, x2)) return true;
          Vec s = component_sum(x, x2);
          for (double v : s) {
            if (v < sum_lo || v > sum_hi) return true;
          }
          return yield(Case{x, x2, std::nullopt});
        });
      });
    };
  }
  k.sample = [n, win, sum_lo, sum_hi](Rng& rng) {
    auto [x, x2] = sample_comonotonic_pair(rng, n, win, sum_lo, sum_hi);
    return Case{std::move(x), std::move(x2), std::nullopt};
  };
  k.eval = [&f, domain, sum_lo, sum_hi](const Case& c) {
    const Vec s = component_sum(c.x, c.x2);
    assert_inside(c.x, domain, "comonotonic operand");
    assert_inside(c.x2, domain, "comonotonic operand");
    for (double v : s) {
      const double eps = 1e-9 * (1.0 + std::fabs(v));
      if (v < sum_lo - eps || v > sum_hi + eps) {
        throw std::logic_error("internal sampler error: comonotonic sum left the domain");
      }
    }
    return std::pair<double, double>(f(s), f(c.x) + f(c.x2));
  };
  return k;
}

Kernel horizontal_min_kernel(const RealFn& f, int n, const DomainSpec& domain) {
  const Interval win = sampling_window(domain);
  Kernel k;
  if (n <= kSweepMaxDim) {
    const std::vector<double> grid = lattice_values(domain, -2, 2);
    if (!grid.empty()) {
      k.sweep = [grid, n, domain](const std::function<bool(const Case&)>& yield) {
        for_each_lattice_vector(grid, n, [&](const Vec& x) {
          for (double c : grid) {
            if (!domain.contains(cut_above(x, c))) continue;
            if (!yield(Case{x, {}, c})) return false;
          }
          return true;
        });
      };
    }
  }
  k.sample = [n, win, domain](Rng& rng) {
    Vec x = draw_iid(rng, n, win);
    const double mx = *std::max_element(x.begin(), x.end());
    // Closure: every component of cut_above(x, c) must stay below the
    // upper end of the domain, which pins c >= max(x) - hi.
    double lo = win.lo;
    if (!std::isinf(domain.hi())) lo = std::max(lo, mx - domain.hi());
    const double c = rng.uniform(lo, win.hi);
    return Case{std::move(x), {}, c};
  };
  k.eval = [&f, domain](const Case& c) {
    const Vec low = meet_scalar(c.x, *c.cut);
    const Vec high = cut_above(c.x, *c.cut);
    assert_inside(c.x, domain, "hmin sample");
    assert_inside(*c.cut, domain, "hmin cut");
    assert_inside(low, domain, "hmin lower part");
    assert_inside(high, domain, "hmin upper part");
    return std::pair<double, double>(f(c.x), f(low) + f(high));
  };
  return k;
}

Kernel horizontal_max_kernel(const RealFn& f, int n, const DomainSpec& domain) {
  const Interval win = sampling_window(domain);
  Kernel k;
  if (n <= kSweepMaxDim) {
    const std::vector<double> grid = lattice_values(domain, -2, 2);
    if (!grid.empty()) {
      k.sweep = [grid, n, domain](const std::function<bool(const Case&)>& yield) {
        for_each_lattice_vector(grid, n, [&](const Vec& x) {
          for (double c : grid) {
            if (!domain.contains(cut_below(x, c))) continue;
            if (!yield(Case{x, {}, c})) return false;
          }
          return true;
        });
      };
    }
  }
  k.sample = [n, win, domain](Rng& rng) {
    Vec x = draw_iid(rng, n, win);
    const double mn = *std::min_element(x.begin(), x.end());
    double hi = win.hi;
    if (!std::isinf(domain.lo())) hi = std::min(hi, mn - domain.lo());
    const double c = rng.uniform(win.lo, hi);
    return Case{std::move(x), {}, c};
  };
  k.eval = [&f, domain](const Case& c) {
    const Vec high = join_scalar(c.x, *c.cut);
    const Vec low = cut_below(c.x, *c.cut);
    assert_inside(c.x, domain, "hmax sample");
    assert_inside(*c.cut, domain, "hmax cut");
    assert_inside(high, domain, "hmax upper part");
    assert_inside(low, domain, "hmax lower part");
    return std::pair<double, double>(f(c.x), f(high) + f(low));
  };
  return k;
}

Kernel horizontal_median_kernel(const RealFn& f, int n, const DomainSpec& domain) {
  const Interval win = sampling_window(domain);
  Kernel k;
  if (n <= kSweepMaxDim) {
    const std::vector<double> grid = lattice_values(domain, -2, 2);
    std::vector<double> cuts;
    for (double c : grid) {
      if (c >= 0.0) cuts.push_back(c);
    }
    if (!grid.empty() && !cuts.empty()) {
      k.sweep = [grid, cuts, n](const std::function<bool(const Case&)>& yield) {
        for_each_lattice_vector(grid, n, [&](const Vec& x) {
          for (double c : cuts) {
            if (!yield(Case{x, {}, c})) return false;
          }
          return true;
        });
      };
    }
  }
  k.sample = [n, win](Rng& rng) {
    Vec x = draw_iid(rng, n, win);
    const double c = rng.uniform(0.0, win.hi);
    return Case{std::move(x), {}, c};
  };
  k.eval = [&f, domain](const Case& c) {
    const Vec mid = med_clamp(c.x, *c.cut);
    const Vec high = cut_above(c.x, *c.cut);
    const Vec low = cut_below(c.x, -*c.cut);
    assert_inside(c.x, domain, "hmedian sample");
    assert_inside(mid, domain, "hmedian middle part");
    assert_inside(high, domain, "hmedian upper part");
    assert_inside(low, domain, "hmedian lower part");
    return std::pair<double, double>(f(c.x), f(mid) + f(high) + f(low));
  };
  return k;
}

Kernel splitting_kernel(const RealFn& f, int n, const DomainSpec& domain) {
  const Interval win = sampling_window(domain);
  Kernel k;
  if (n <= kSweepMaxDim) {
    const std::vector<double> grid = lattice_values(domain, -2, 2);
    if (!grid.empty()) {
      k.sweep = [grid, n](const std::function<bool(const Case&)>& yield) {
        for_each_lattice_vector(grid, n,
                                [&](const Vec& x) { return yield(Case{x, {}, std::nullopt}); });
      };
    }
  }
  k.sample = [n, win](Rng& rng) { return Case{draw_iid(rng, n, win), {}, std::nullopt}; };
  k.eval = [&f, domain](const Case& c) {
    Vec up = pos_part(c.x);
    Vec down(c.x.size());
    for (std::size_t i = 0; i < c.x.size(); ++i) down[i] = std::min(c.x[i], 0.0);
    assert_inside(c.x, domain, "splitting sample");
    assert_inside(up, domain, "positive part");
    assert_inside(down, domain, "negative part");
    return std::pair<double, double>(f(c.x), f(up) + f(down));
  };
  return k;
}

Kernel homogeneity_kernel(const RealFn& f, int n, const DomainSpec& domain, bool positive_only) {
  const Interval win = sampling_window(domain);
  Kernel k;
  if (n <= kSweepMaxDim) {
    const std::vector<double> grid = lattice_values(domain, -2, 2);
    std::vector<double> factors;
    for (int c = -2; c <= 2; ++c) {
      if (c == 0 || (positive_only && c < 0)) continue;
      factors.push_back(c);
    }
    if (!grid.empty()) {
      k.sweep = [grid, factors, n, domain](const std::function<bool(const Case&)>& yield) {
        for_each_lattice_vector(grid, n, [&](const Vec& x) {
          for (double c : factors) {
            Vec scaled(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = c * x[i];
            if (!domain.contains(scaled)) continue;
            if (!yield(Case{x, {}, c})) return false;
          }
          return true;
        });
      };
    }
  }
  k.sample = [n, win, domain, positive_only](Rng& rng) {
    Vec x = draw_iid(rng, n, win);
    // Exact interval of admissible factors: c x must stay inside the
    // domain componentwise.  It always contains 0.
    double cmin = -2.0, cmax = 2.0;
    for (double v : x) {
      if (v > 0.0) {
        cmax = std::min(cmax, domain.hi() / v);
        cmin = std::max(cmin, domain.lo() / v);
      } else if (v < 0.0) {
        cmax = std::min(cmax, domain.lo() / v);
        cmin = std::max(cmin, domain.hi() / v);
      }
    }
    double c;
    if (positive_only) {
      c = cmax * (1.0 - rng.uniform01());  // (0, cmax]
    } else {
      c = rng.uniform(cmin, cmax);
    }
    return Case{std::move(x), {}, c};
  };
  k.eval = [&f, domain](const Case& c) {
    Vec scaled(c.x.size());
    for (std::size_t i = 0; i < c.x.size(); ++i) scaled[i] = *c.cut * c.x[i];
    assert_inside(c.x, domain, "homogeneity sample");
    assert_inside(scaled, domain, "scaled sample");
    return std::pair<double, double>(f(scaled), *c.cut * f(c.x));
  };
  return k;
}

Kernel oddness_kernel(const RealFn& f, int n, const DomainSpec& domain) {
  const Interval win = sampling_window(domain);
  const double base = f(Vec(std::size_t(n), 0.0));
  Kernel k;
  if (n <= kSweepMaxDim) {
    const std::vector<double> grid = lattice_values(domain, 0, 2);
    if (!grid.empty()) {
      k.sweep = [grid, n](const std::function<bool(const Case&)>& yield) {
        for_each_lattice_vector(grid, n,
                                [&](const Vec& x) { return yield(Case{x, {}, std::nullopt}); });
      };
    }
  }
  k.sample = [n, win](Rng& rng) {
    return Case{draw_iid(rng, n, Interval{0.0, win.hi}), {}, std::nullopt};
  };
  k.eval = [&f, domain, base](const Case& c) {
    Vec neg(c.x.size());
    for (std::size_t i = 0; i < c.x.size(); ++i) neg[i] = -c.x[i];
    assert_inside(c.x, domain, "oddness sample");
    assert_inside(neg, domain, "mirrored sample");
    return std::pair<double, double>(f(neg) - base, -(f(c.x) - base));
  };
  return k;
}

Verdict run_comonotonic(const RealFn& f, int n, const CheckConfig& cfg, int orthant,
                        std::uint64_t salt) {
  const DomainSpec& d = cfg.domain;
  Interval win = sampling_window(d);
  double sum_lo = d.lo();
  double sum_hi = d.hi();
  int grid_lo = -2, grid_hi = 2;
  if (orthant > 0) {
    win.lo = 0.0;
    sum_lo = 0.0;
    grid_lo = 0;
  } else if (orthant < 0) {
    win.hi = 0.0;
    sum_hi = 0.0;
    grid_hi = 0;
  }
  DomainSpec operand = d;
  if (orthant != 0) {
    // Operands themselves live in the orthant slice of the domain.
    operand = orthant > 0 ? (std::isinf(d.hi()) ? DomainSpec::nonneg()
                                                : DomainSpec::box(0.0, d.hi()))
                          : (std::isinf(d.lo()) ? DomainSpec::nonpos()
                                                : DomainSpec::box(d.lo(), 0.0));
  }
  std::vector<double> grid = lattice_values(operand, grid_lo, grid_hi);
  Kernel k = comonotonic_kernel(f, n, operand, win, sum_lo, sum_hi, grid);
  if (n > kSweepMaxDim) k.sweep = nullptr;
  return run_kernel(k, cfg, salt);
}

}  // namespace

Verdict check_comonotonic_additivity(const RealFn& f, int n, const CheckConfig& cfg) {
  return run_comonotonic(f, n, cfg, 0, 0x636f6d6f);
}

Verdict check_positive_comonotonic_additivity(const RealFn& f, int n, const CheckConfig& cfg) {
  require_symmetric(cfg.domain, "positive comonotonic additivity");
  return run_comonotonic(f, n, cfg, +1, 0x70636f6d);
}

Verdict check_negative_comonotonic_additivity(const RealFn& f, int n, const CheckConfig& cfg) {
  require_symmetric(cfg.domain, "negative comonotonic additivity");
  return run_comonotonic(f, n, cfg, -1, 0x6e636f6d);
}

Verdict check_horizontal_min_additivity(const RealFn& f, int n, const CheckConfig& cfg) {
  return run_kernel(horizontal_min_kernel(f, n, cfg.domain), cfg, 0x686d696e);
}

Verdict check_horizontal_max_additivity(const RealFn& f, int n, const CheckConfig& cfg) {
  return run_kernel(horizontal_max_kernel(f, n, cfg.domain), cfg, 0x686d6178);
}

Verdict check_horizontal_median_additivity(const RealFn& f, int n, const CheckConfig& cfg) {
  require_symmetric(cfg.domain, "horizontal median additivity");
  return run_kernel(horizontal_median_kernel(f, n, cfg.domain), cfg, 0x686d6564);
}

namespace {

Verdict run_orthant_horizontal(const RealFn& f, int n, const CheckConfig& cfg, bool positive,
                               std::uint64_t salt) {
  // Same kernels as the unrestricted checks, but over the orthant
  // slice of the domain; the slice is itself a valid interval domain.
  const DomainSpec& d = cfg.domain;
  const DomainSpec slice =
      positive ? (std::isinf(d.hi()) ? DomainSpec::nonneg() : DomainSpec::box(0.0, d.hi()))
               : (std::isinf(d.lo()) ? DomainSpec::nonpos() : DomainSpec::box(d.lo(), 0.0));
  CheckConfig sliced = cfg;
  sliced.domain = slice;
  return run_kernel(positive ? horizontal_min_kernel(f, n, slice)
                             : horizontal_max_kernel(f, n, slice),
                    sliced, salt);
}

}  // namespace

Verdict check_positive_horizontal_min_additivity(const RealFn& f, int n, const CheckConfig& cfg) {
  require_symmetric(cfg.domain, "positive horizontal min additivity");
  return run_orthant_horizontal(f, n, cfg, true, 0x70686d6e);
}

Verdict check_negative_horizontal_max_additivity(const RealFn& f, int n, const CheckConfig& cfg) {
  require_symmetric(cfg.domain, "negative horizontal max additivity");
  return run_orthant_horizontal(f, n, cfg, false, 0x6e686d78);
}

Verdict check_splitting(const RealFn& f, int n, const CheckConfig& cfg) {
  require_symmetric(cfg.domain, "splitting");
  return run_kernel(splitting_kernel(f, n, cfg.domain), cfg, 0x73706c74);
}

Verdict check_homogeneity(const RealFn& f, int n, const CheckConfig& cfg, bool positive_only) {
  return run_kernel(homogeneity_kernel(f, n, cfg.domain, positive_only), cfg,
                    positive_only ? 0x686f6d70 : 0x686f6d66);
}

Verdict check_oddness_positive_orthant(const RealFn& f, int n, const CheckConfig& cfg) {
  require_symmetric(cfg.domain, "oddness on the positive orthant");
  return run_kernel(oddness_kernel(f, n, cfg.domain), cfg, 0x6f646473);
}

// ---------------------------------------------------------------------------
// Diagonal sections.

namespace {

enum class SectionSide { pos, neg, full };

std::string subset_label(std::uint32_t subset, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (subset & (std::uint32_t(1) << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

Kernel section_additivity_kernel(const RealFn& f, int n, std::uint32_t subset, SectionSide side,
                                 const DomainSpec& domain) {
  const Interval win = sampling_window(domain);
  Interval tw = win;
  double sum_lo = domain.lo();
  double sum_hi = domain.hi();
  const char* side_name = "both signs";
  if (side == SectionSide::pos) {
    tw.lo = 0.0;
    sum_lo = 0.0;
    side_name = "nonnegative side";
  } else if (side == SectionSide::neg) {
    tw.hi = 0.0;
    sum_hi = 0.0;
    side_name = "nonpositive side";
  }
  const auto delta = [&f, n, subset](double t) { return diagonal_section(f, n, subset, t); };
  Kernel k;
  k.note = "section " + subset_label(subset, n) + ", " + side_name;
  const int glo = int(std::ceil(std::max(tw.lo, -kWindowHalfWidth)));
  const int ghi = int(std::floor(std::min(tw.hi, kWindowHalfWidth)));
  k.sweep = [glo, ghi, sum_lo, sum_hi](const std::function<bool(const Case&)>& yield) {
    for (int t = glo; t <= ghi; ++t) {
      for (int t2 = glo; t2 <= ghi; ++t2) {
        const double s = double(t) + double(t2);
        if (s < sum_lo || s > sum_hi) continue;
        if (!yield(Case{{double(t)}, {double(t2)}, std::nullopt})) return;
      }
    }
  };
  k.sample = [tw, sum_lo, sum_hi](Rng& rng) {
    const double t = rng.uniform(tw.lo, tw.hi);
    const double lo2 = std::max(tw.lo, sum_lo - t);
    const double hi2 = std::min(tw.hi, sum_hi - t);
    const double t2 = rng.uniform(lo2, hi2);
    return Case{{t}, {t2}, std::nullopt};
  };
  k.eval = [delta, domain](const Case& c) {
    const double t = c.x[0], t2 = c.x2[0];
    assert_inside(t, domain, "section argument");
    assert_inside(t2, domain, "section argument");
    assert_inside(t + t2, domain, "section argument sum");
    return std::pair<double, double>(delta(t + t2), delta(t) + delta(t2));
  };
  return k;
}

Kernel diagonal_oddness_kernel(const RealFn& f, int n, const DomainSpec& domain) {
  const Interval win = sampling_window(domain);
  const std::uint32_t full = (std::uint32_t(1) << n) - 1;
  const auto delta = [&f, n, full](double t) { return diagonal_section(f, n, full, t); };
  Kernel k;
  k.note = "full diagonal oddness";
  const int ghi = int(std::floor(std::min(win.hi, kWindowHalfWidth)));
  k.sweep = [ghi](const std::function<bool(const Case&)>& yield) {
    for (int t = 0; t <= ghi; ++t) {
      if (!yield(Case{{double(t)}, {}, std::nullopt})) return;
    }
  };
  k.sample = [win](Rng& rng) { return Case{{rng.uniform(0.0, win.hi)}, {}, std::nullopt}; };
  k.eval = [delta, domain](const Case& c) {
    const double t = c.x[0];
    assert_inside(t, domain, "diagonal argument");
    assert_inside(-t, domain, "diagonal argument");
    return std::pair<double, double>(delta(-t), -delta(t));
  };
  return k;
}

}  // namespace

bool DiagonalReport::min_lemma() const {
  for (const auto& s : sections) {
    if (!s.additive_pos.passed) return false;
  }
  if (!sections.empty() && sections.back().additive_full &&
      !sections.back().additive_full->passed) {
    return false;
  }
  return !diagonal_odd || diagonal_odd->passed;
}

bool DiagonalReport::max_lemma() const {
  for (const auto& s : sections) {
    if (!s.additive_neg.passed) return false;
  }
  if (!sections.empty() && sections.back().additive_full &&
      !sections.back().additive_full->passed) {
    return false;
  }
  return !diagonal_odd || diagonal_odd->passed;
}

DiagonalReport check_diagonal_sections(const RealFn& f, int n, const CheckConfig& cfg) {
  if (n < 1 || n > 16) throw DimensionError("diagonal sections need 1 <= n <= 16");
  const DomainSpec& d = cfg.domain;
  const bool two_sided = d.lo() < 0.0 && d.hi() > 0.0;
  const std::uint32_t count = std::uint32_t(1) << n;

  DiagonalReport report;
  report.sections.reserve(count);
  std::uint64_t total_trials = 0;

  const auto run_side = [&](std::uint32_t subset, SectionSide side, std::uint64_t salt) {
    CheckConfig sub = cfg;
    sub.seed = Rng::mix(cfg.seed, (std::uint64_t(subset) << 3) | salt);
    Verdict v = run_kernel(section_additivity_kernel(f, n, subset, side, d), sub, salt);
    total_trials += v.trials;
    return v;
  };

  for (std::uint32_t subset = 0; subset < count; ++subset) {
    SectionReport sr;
    sr.subset = subset;
    sr.additive_pos = run_side(subset, SectionSide::pos, 1);
    sr.additive_neg = run_side(subset, SectionSide::neg, 2);
    if (two_sided) sr.additive_full = run_side(subset, SectionSide::full, 3);
    report.sections.push_back(std::move(sr));
  }
  if (d.symmetric()) {
    CheckConfig sub = cfg;
    sub.seed = Rng::mix(cfg.seed, 0x6f6464);
    Verdict v = run_kernel(diagonal_oddness_kernel(f, n, d), sub, 4);
    total_trials += v.trials;
    report.diagonal_odd = std::move(v);
  }

  // Aggregate in the order the sub-checks above imply: one-sided
  // additivity per subset, then the full diagonal across both signs,
  // then its oddness.
  report.overall.passed = true;
  report.overall.seed = cfg.seed;
  report.overall.trials = total_trials;
  for (const auto& s : report.sections) {
    if (!s.additive_pos.passed) {
      report.overall.passed = false;
      report.overall.witness = s.additive_pos.witness;
      break;
    }
  }
  if (report.overall.passed && two_sided) {
    const auto& full = report.sections.back().additive_full;
    if (full && !full->passed) {
      report.overall.passed = false;
      report.overall.witness = full->witness;
    }
  }
  if (report.overall.passed && report.diagonal_odd && !report.diagonal_odd->passed) {
    report.overall.passed = false;
    report.overall.witness = report.diagonal_odd->witness;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Name table and dispatcher.

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::comonotonic: return "comonotonic";
    case Axiom::horizontal_min: return "hmin";
    case Axiom::horizontal_max: return "hmax";
    case Axiom::horizontal_median: return "hmedian";
    case Axiom::positive_comonotonic: return "pos-comonotonic";
    case Axiom::negative_comonotonic: return "neg-comonotonic";
    case Axiom::positive_horizontal_min: return "pos-hmin";
    case Axiom::negative_horizontal_max: return "neg-hmax";
    case Axiom::splitting: return "splitting";
    case Axiom::diagonal: return "diagonal";
    case Axiom::homogeneity: return "homogeneity";
    case Axiom::oddness_positive: return "oddness-pos";
  }
  return "unknown";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
  for (Axiom a :
       {Axiom::comonotonic, Axiom::horizontal_min, Axiom::horizontal_max,
        Axiom::horizontal_median, Axiom::positive_comonotonic, Axiom::negative_comonotonic,
        Axiom::positive_horizontal_min, Axiom::negative_horizontal_max, Axiom::splitting,
        Axiom::diagonal, Axiom::homogeneity, Axiom::oddness_positive}) {
    if (axiom_name(a) == name) return a;
  }
  return std::nullopt;
}

Verdict check_axiom(const RealFn& f, int n, Axiom axiom, const CheckConfig& cfg) {
  switch (axiom) {
    case Axiom::comonotonic: return check_comonotonic_additivity(f, n, cfg);
    case Axiom::horizontal_min: return check_horizontal_min_additivity(f, n, cfg);
    case Axiom::horizontal_max: return check_horizontal_max_additivity(f, n, cfg);
    case Axiom::horizontal_median: return check_horizontal_median_additivity(f, n, cfg);
    case Axiom::positive_comonotonic: return check_positive_comonotonic_additivity(f, n, cfg);
    case Axiom::negative_comonotonic: return check_negative_comonotonic_additivity(f, n, cfg);
    case Axiom::positive_horizontal_min:
      return check_positive_horizontal_min_additivity(f, n, cfg);
    case Axiom::negative_horizontal_max:
      return check_negative_horizontal_max_additivity(f, n, cfg);
    case Axiom::splitting: return check_splitting(f, n, cfg);
    case Axiom::diagonal: return check_diagonal_sections(f, n, cfg).overall;
    case Axiom::homogeneity: return check_homogeneity(f, n, cfg, false);
    case Axiom::oddness_positive: return check_oddness_positive_orthant(f, n, cfg);
  }
  throw Error("unknown axiom");
}

}  // namespace choqlab
