#ifndef CHOQLAB_LOVASZ_HPP
#define CHOQLAB_LOVASZ_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "choqlab/setfn.hpp"
#include "choqlab/vecops.hpp"

namespace choqlab {

/// Piecewise-linear extension of a set function: on each cone of
/// commonly ordered vectors it interpolates phi affinely between the
/// indicator vectors of the upper sets of the ordering.
class LovaszExtension {
 public:
  explicit LovaszExtension(SetFunction phi) : phi_(std::move(phi)) {}
  const SetFunction& phi() const { return phi_; }
  int n() const { return phi_.n(); }

 private:
  SetFunction phi_;
};

/// Symmetric variant: f(x) = f(0) + f0(x+) - f0(x-), built from the
/// same set function but odd across the origin by construction.
class SymmetricLovaszExtension {
 public:
  explicit SymmetricLovaszExtension(SetFunction phi) : phi_(std::move(phi)) {}
  const SetFunction& phi() const { return phi_; }
  int n() const { return phi_.n(); }

 private:
  SetFunction phi_;
};

/// Two-coefficient class evaluating phi_pos on the positive part and
/// phi_neg on the negative part; requires phi_pos(empty) ==
/// phi_neg(empty) == 0 and equal arity.
class MedianAdditiveExtension {
 public:
  MedianAdditiveExtension(SetFunction phi_pos, SetFunction phi_neg);
  const SetFunction& phi_pos() const { return pos_; }
  const SetFunction& phi_neg() const { return neg_; }
  int n() const { return pos_.n(); }

 private:
  SetFunction pos_;
  SetFunction neg_;
};

/// Ascending telescoping evaluation; the overload with an explicit
/// chain exists so ties can be resolved by any valid permutation.
double eval_lovasz(const LovaszExtension& f, std::span<const double> x);
double eval_lovasz(const LovaszExtension& f, std::span<const double> x, const SortChain& chain);

/// Descending-chain evaluation of the same function.  The coefficients
/// attached to lower sets are derived from phi through the grounding
/// identity linking sections at -1 to complements at +1, so no second
/// coefficient table is stored.
double eval_lovasz_dual(const LovaszExtension& f, std::span<const double> x);
double eval_lovasz_dual(const LovaszExtension& f, std::span<const double> x,
                        const SortChain& chain);

/// Positive/negative-part form f(0) + f0(x+) - f0(x-).
double eval_symmetric(const SymmetricLovaszExtension& f, std::span<const double> x);

/// Single-pass split-index telescoping of the same function; agrees
/// with eval_symmetric up to rounding.
double eval_symmetric_telescoping(const SymmetricLovaszExtension& f, std::span<const double> x);
double eval_symmetric_telescoping(const SymmetricLovaszExtension& f, std::span<const double> x,
                                  const SortChain& chain);

double eval_median_additive(const MedianAdditiveExtension& f, std::span<const double> x);
double eval_median_additive(const MedianAdditiveExtension& f, std::span<const double> x,
                            const SortChain& chain);

/// Section of f along the subset diagonal: t -> f(t * indicator(subset)).
double diagonal_section(const RealFn& f, int n, std::uint32_t subset, double t);

/// One-place sections for every subset, split into a nonnegative and a
/// nonpositive branch.  A missing (null) branch means the section is
/// not declared on that half-line and querying it throws DomainError.
/// Declared branches must map 0 to 0 (checked on construction).
class SectionFamily {
 public:
  using Section = std::function<double(double)>;

  SectionFamily(int n, std::vector<Section> pos, std::vector<Section> neg);

  /// Both branches linear: t * phi(A).
  static SectionFamily linear(const SetFunction& phi);
  /// Positive branch t * phi_pos(A), negative branch t * phi_neg(A).
  static SectionFamily two_sided_linear(const SetFunction& phi_pos, const SetFunction& phi_neg);

  int n() const { return n_; }
  double pos_at(std::uint32_t subset, double t) const;
  double neg_at(std::uint32_t subset, double t) const;
  /// Routes by the sign of t (0 goes to the positive branch).
  double at(std::uint32_t subset, double t) const;

 private:
  int n_;
  std::vector<Section> pos_;
  std::vector<Section> neg_;
};

/// Which representation formula to assemble from the sections.
enum class SectionFormula {
  /// Ascending chain over upper sets, increments nonnegative past the
  /// first term.
  min_chain,
  /// Descending chain over lower sets, increments nonpositive past the
  /// first term.
  max_chain,
  /// Split form: upper-set terms for the nonnegative components,
  /// lower-set terms for the negative ones.
  median_split,
};

/// Evaluates the chosen representation formula with user-supplied
/// sections; makes no additivity assumption about them.
double reconstruct_from_sections(const SectionFamily& family, std::span<const double> x,
                                 SectionFormula formula = SectionFormula::min_chain);

/// The extension is nondecreasing in every coordinate iff its set
/// function is a capacity.
bool is_choquet(const LovaszExtension& f);
bool is_symmetric_choquet(const SymmetricLovaszExtension& f);

RealFn as_function(const LovaszExtension& f);
RealFn as_function(const SymmetricLovaszExtension& f);
RealFn as_function(const MedianAdditiveExtension& f);

}  // namespace choqlab

#endif  // CHOQLAB_LOVASZ_HPP
