#ifndef CHOQLAB_AXIOMS_HPP
#define CHOQLAB_AXIOMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "choqlab/tolerance.hpp"
#include "choqlab/vecops.hpp"

namespace choqlab {

/// Concrete counterexample to an axiom instance.  x2 is the second
/// vector for pair axioms and empty otherwise; cut holds the cut level
/// or the scale factor when the axiom has one.
struct Witness {
  std::vector<double> x;
  std::vector<double> x2;
  std::optional<double> cut;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  std::string note;
};

/// Outcome of one checker run.  trials counts the axiom instances that
/// were actually evaluated (deterministic sweep cases first, then the
/// random ones); on failure it stops at the witness.  Re-running with
/// the same configuration reproduces the witness bit for bit.
struct Verdict {
  bool passed = true;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<Witness> witness;
};

/// Shared checker configuration.  trials counts random samples on top
/// of the deterministic lattice sweep that every checker runs first
/// (all integer vectors with components in {-2..2} intersected with the
/// domain, for dimensions up to 4, cuts from the same grid).  jobs > 1
/// partitions the random trials across threads; the verdict does not
/// depend on the partition.
struct CheckConfig {
  DomainSpec domain = DomainSpec::full_line();
  std::uint64_t trials = 10000;
  Tolerance tolerance{};
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// f(x + x') = f(x) + f(x') for comonotonic x, x' with x + x' inside
/// the domain.
Verdict check_comonotonic_additivity(const RealFn& f, int n, const CheckConfig& cfg);

/// f(x) = f(x meet c) + f(cut_above(x, c)).
Verdict check_horizontal_min_additivity(const RealFn& f, int n, const CheckConfig& cfg);

/// f(x) = f(x join c) + f(cut_below(x, c)).
Verdict check_horizontal_max_additivity(const RealFn& f, int n, const CheckConfig& cfg);

/// f(x) = f(med_clamp(x, c)) + f(cut_above(x, c)) + f(cut_below(x, -c))
/// for c >= 0; needs a symmetric domain (DomainKindError otherwise).
Verdict check_horizontal_median_additivity(const RealFn& f, int n, const CheckConfig& cfg);

/// Comonotonic additivity restricted to the nonnegative orthant of a
/// symmetric domain.
Verdict check_positive_comonotonic_additivity(const RealFn& f, int n, const CheckConfig& cfg);
/// Comonotonic additivity restricted to the nonpositive orthant.
Verdict check_negative_comonotonic_additivity(const RealFn& f, int n, const CheckConfig& cfg);
/// Horizontal min additivity with samples from the nonnegative orthant.
Verdict check_positive_horizontal_min_additivity(const RealFn& f, int n, const CheckConfig& cfg);
/// Horizontal max additivity with samples from the nonpositive orthant.
Verdict check_negative_horizontal_max_additivity(const RealFn& f, int n, const CheckConfig& cfg);

/// f(x) = f(pos_part(x)) + f(-neg_part(x)); symmetric domains only.
Verdict check_splitting(const RealFn& f, int n, const CheckConfig& cfg);

/// f(c x) = c f(x); for positive_only the factor ranges over c > 0,
/// otherwise over both signs (with c x kept inside the domain).
Verdict check_homogeneity(const RealFn& f, int n, const CheckConfig& cfg, bool positive_only);

/// f0(-x) = -f0(x) for x in the nonnegative orthant, where
/// f0 = f - f(0); symmetric domains only.
Verdict check_oddness_positive_orthant(const RealFn& f, int n, const CheckConfig& cfg);

/// Sub-verdicts for one subset diagonal t -> f(t * indicator(subset)):
/// additivity on the nonnegative side, on the nonpositive side, and
/// across the whole interval (only when the domain has both sides).
struct SectionReport {
  std::uint32_t subset = 0;
  Verdict additive_pos;
  Verdict additive_neg;
  std::optional<Verdict> additive_full;
};

/// Per-subset section report plus the oddness of the full diagonal on
/// symmetric domains.  The named aggregates mirror what horizontal
/// min/max additivity imply: every one-sided section additive, and on
/// symmetric domains a full diagonal that is additive and odd.  The
/// mixed-sign sub-verdicts of proper subsets are diagnostics and do not
/// enter either aggregate.
struct DiagonalReport {
  std::vector<SectionReport> sections;
  std::optional<Verdict> diagonal_odd;
  Verdict overall;  // min-variant aggregate with the first failing witness

  bool min_lemma() const;
  bool max_lemma() const;
};

DiagonalReport check_diagonal_sections(const RealFn& f, int n, const CheckConfig& cfg);

enum class Axiom {
  comonotonic,
  horizontal_min,
  horizontal_max,
  horizontal_median,
  positive_comonotonic,
  negative_comonotonic,
  positive_horizontal_min,
  negative_horizontal_max,
  splitting,
  diagonal,
  homogeneity,
  oddness_positive,
};

std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> axiom_from_name(std::string_view name);

/// Uniform dispatcher used by the command line tool; homogeneity runs
/// with both signs and diagonal reports its min-variant aggregate.
Verdict check_axiom(const RealFn& f, int n, Axiom axiom, const CheckConfig& cfg);

}  // namespace choqlab

#endif  // CHOQLAB_AXIOMS_HPP
