#include "choqlab/lovasz.hpp"

#include <string>
#include <utility>

#include "choqlab/errors.hpp"

namespace choqlab {

namespace {

void check_dim(int n, std::size_t got) {
  if (got != std::size_t(n)) {
    throw DimensionError("expected a vector of length " + std::to_string(n) + ", got " +
                         std::to_string(got));
  }
}

}  // namespace

MedianAdditiveExtension::MedianAdditiveExtension(SetFunction phi_pos, SetFunction phi_neg)
    : pos_(std::move(phi_pos)), neg_(std::move(phi_neg)) {
  if (pos_.n() != neg_.n()) {
    throw DimensionError("phi_pos and phi_neg must have the same arity");
  }
  if (pos_[0] != 0.0 || neg_[0] != 0.0) {
    throw ValueError("phi_pos and phi_neg must both vanish on the empty set");
  }
}

double eval_lovasz(const LovaszExtension& f, std::span<const double> x, const SortChain& chain) {
  const SetFunction& phi = f.phi();
  check_dim(phi.n(), x.size());
  const double base = phi[0];
  double acc = 0.0;
  double prev = 0.0;
  for (int i = 0; i < phi.n(); ++i) {
    const double xi = x[chain.sigma[i]];
    const double inc = (i == 0) ? xi : xi - prev;
    acc += inc * (phi[chain.upper[i]] - base);
    prev = xi;
  }
  return base + acc;
}

double eval_lovasz(const LovaszExtension& f, std::span<const double> x) {
  return eval_lovasz(f, x, sort_chain(x));
}

double eval_lovasz_dual(const LovaszExtension& f, std::span<const double> x,
                        const SortChain& chain) {
  const SetFunction& phi = f.phi();
  check_dim(phi.n(), x.size());
  const int n = phi.n();
  const double base = phi[0];
  const double top = phi[phi.full_mask()];
  // Descending chain: the largest component carries the full diagonal,
  // every earlier one a nonpositive increment whose coefficient is the
  // grounded section value top - phi(upper complement of the lower set).
  double acc = x[chain.sigma[n - 1]] * (top - base);
  for (int i = 0; i + 1 < n; ++i) {
    const double dec = x[chain.sigma[i]] - x[chain.sigma[i + 1]];
    acc += dec * (top - phi[chain.upper[i + 1]]);
  }
  return base + acc;
}

double eval_lovasz_dual(const LovaszExtension& f, std::span<const double> x) {
  return eval_lovasz_dual(f, x, sort_chain(x));
}

double eval_symmetric(const SymmetricLovaszExtension& f, std::span<const double> x) {
  const SetFunction& phi = f.phi();
  check_dim(phi.n(), x.size());
  const LovaszExtension plain(phi);
  const double base = phi[0];
  const Vec up = pos_part(x);
  const Vec down = neg_part(x);
  return base + (eval_lovasz(plain, up) - base) - (eval_lovasz(plain, down) - base);
}

namespace {

// Split telescoping shared by the symmetric and median evaluators:
// upper-set terms for components >= 0, lower-set terms for the strictly
// negative ones.  coef_* map a subset mask to its section slope.
template <typename CoefUp, typename CoefDown>
double split_telescoping(std::span<const double> x, const SortChain& chain, int n,
                         CoefUp coef_up, CoefDown coef_down) {
  const int p = chain.split;
  double acc = 0.0;
  if (p < n) {
    acc += x[chain.sigma[p]] * coef_up(chain.upper[p]);
    for (int j = p + 1; j < n; ++j) {
      acc += (x[chain.sigma[j]] - x[chain.sigma[j - 1]]) * coef_up(chain.upper[j]);
    }
  }
  if (p > 0) {
    acc += x[chain.sigma[p - 1]] * coef_down(chain.lower[p]);
    for (int j = 0; j + 2 <= p; ++j) {
      acc += (x[chain.sigma[j]] - x[chain.sigma[j + 1]]) * coef_down(chain.lower[j + 1]);
    }
  }
  return acc;
}

}  // namespace

double eval_symmetric_telescoping(const SymmetricLovaszExtension& f, std::span<const double> x,
                                  const SortChain& chain) {
  const SetFunction& phi = f.phi();
  check_dim(phi.n(), x.size());
  const double base = phi[0];
  const auto coef = [&](std::uint32_t mask) { return phi[mask] - base; };
  return base + split_telescoping(x, chain, phi.n(), coef, coef);
}

double eval_symmetric_telescoping(const SymmetricLovaszExtension& f, std::span<const double> x) {
  return eval_symmetric_telescoping(f, x, sort_chain(x));
}

double eval_median_additive(const MedianAdditiveExtension& f, std::span<const double> x,
                            const SortChain& chain) {
  check_dim(f.n(), x.size());
  const SetFunction& pos = f.phi_pos();
  const SetFunction& neg = f.phi_neg();
  return split_telescoping(
      x, chain, f.n(), [&](std::uint32_t mask) { return pos[mask]; },
      [&](std::uint32_t mask) { return neg[mask]; });
}

double eval_median_additive(const MedianAdditiveExtension& f, std::span<const double> x) {
  return eval_median_additive(f, x, sort_chain(x));
}

double diagonal_section(const RealFn& f, int n, std::uint32_t subset, double t) {
  if (n < 1 || n > 32) throw DimensionError("diagonal_section needs 1 <= n <= 32");
  if (subset > ((std::uint64_t(1) << n) - 1)) {
    throw DimensionError("subset mask has bits outside the ground set");
  }
  Vec point(std::size_t(n), 0.0);
  for (int i = 0; i < n; ++i) {
    if (subset & (std::uint32_t(1) << i)) point[i] = t;
  }
  return f(point);
}

SectionFamily::SectionFamily(int n, std::vector<Section> pos, std::vector<Section> neg)
    : n_(n), pos_(std::move(pos)), neg_(std::move(neg)) {
  if (n_ < 1 || n_ > 16) throw DimensionError("section family arity must be between 1 and 16");
  const std::size_t want = std::size_t(1) << n_;
  if (pos_.size() != want || neg_.size() != want) {
    throw DimensionError("section family needs one section pair per subset");
  }
  for (std::size_t mask = 0; mask < want; ++mask) {
    if (pos_[mask] && pos_[mask](0.0) != 0.0) {
      throw ValueError("every declared section must map 0 to 0");
    }
    if (neg_[mask] && neg_[mask](0.0) != 0.0) {
      throw ValueError("every declared section must map 0 to 0");
    }
  }
}

SectionFamily SectionFamily::linear(const SetFunction& phi) {
  const std::size_t count = phi.subset_count();
  std::vector<Section> pos(count), neg(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    const double slope = phi[std::uint32_t(mask)];
    pos[mask] = neg[mask] = [slope](double t) { return t * slope; };
  }
  return SectionFamily(phi.n(), std::move(pos), std::move(neg));
}

SectionFamily SectionFamily::two_sided_linear(const SetFunction& phi_pos,
                                              const SetFunction& phi_neg) {
  if (phi_pos.n() != phi_neg.n()) {
    throw DimensionError("phi_pos and phi_neg must have the same arity");
  }
  const std::size_t count = phi_pos.subset_count();
  std::vector<Section> pos(count), neg(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    const double up = phi_pos[std::uint32_t(mask)];
    const double down = phi_neg[std::uint32_t(mask)];
    pos[mask] = [up](double t) { return t * up; };
    neg[mask] = [down](double t) { return t * down; };
  }
  return SectionFamily(phi_pos.n(), std::move(pos), std::move(neg));
}

double SectionFamily::pos_at(std::uint32_t subset, double t) const {
  if (t < 0.0) throw DomainError("positive section branch queried at a negative argument");
  const auto& fn = pos_.at(subset);
  if (!fn) throw DomainError("section not declared on the nonnegative half-line");
  return fn(t);
}

double SectionFamily::neg_at(std::uint32_t subset, double t) const {
  if (t > 0.0) throw DomainError("negative section branch queried at a positive argument");
  const auto& fn = neg_.at(subset);
  if (!fn) throw DomainError("section not declared on the nonpositive half-line");
  return fn(t);
}

double SectionFamily::at(std::uint32_t subset, double t) const {
  return t < 0.0 ? neg_at(subset, t) : pos_at(subset, t);
}

double reconstruct_from_sections(const SectionFamily& family, std::span<const double> x,
                                 SectionFormula formula) {
  const int n = family.n();
  check_dim(n, x.size());
  const SortChain chain = sort_chain(x);
  double acc = 0.0;
  switch (formula) {
    case SectionFormula::min_chain: {
      acc = family.at(chain.upper[0], x[chain.sigma[0]]);
      for (int j = 1; j < n; ++j) {
        acc += family.pos_at(chain.upper[j], x[chain.sigma[j]] - x[chain.sigma[j - 1]]);
      }
      break;
    }
    case SectionFormula::max_chain: {
      acc = family.at(chain.lower[n], x[chain.sigma[n - 1]]);
      for (int j = 0; j + 1 < n; ++j) {
        acc += family.neg_at(chain.lower[j + 1], x[chain.sigma[j]] - x[chain.sigma[j + 1]]);
      }
      break;
    }
    case SectionFormula::median_split: {
      const int p = chain.split;
      if (p < n) {
        acc += family.pos_at(chain.upper[p], x[chain.sigma[p]]);
        for (int j = p + 1; j < n; ++j) {
          acc += family.pos_at(chain.upper[j], x[chain.sigma[j]] - x[chain.sigma[j - 1]]);
        }
      }
      if (p > 0) {
        acc += family.neg_at(chain.lower[p], x[chain.sigma[p - 1]]);
        for (int j = 0; j + 2 <= p; ++j) {
          acc += family.neg_at(chain.lower[j + 1], x[chain.sigma[j]] - x[chain.sigma[j + 1]]);
        }
      }
      break;
    }
  }
  return acc;
}

bool is_choquet(const LovaszExtension& f) { return is_capacity(f.phi()); }

bool is_symmetric_choquet(const SymmetricLovaszExtension& f) { return is_capacity(f.phi()); }

RealFn as_function(const LovaszExtension& f) {
  return [f](std::span<const double> x) { return eval_lovasz(f, x); };
}

RealFn as_function(const SymmetricLovaszExtension& f) {
  return [f](std::span<const double> x) { return eval_symmetric(f, x); };
}

RealFn as_function(const MedianAdditiveExtension& f) {
  return [f](std::span<const double> x) { return eval_median_additive(f, x); };
}

}  // namespace choqlab
