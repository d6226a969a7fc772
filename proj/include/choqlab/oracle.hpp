#ifndef CHOQLAB_ORACLE_HPP
#define CHOQLAB_ORACLE_HPP

#include <span>
#include <vector>

#include "choqlab/axioms.hpp"
#include "choqlab/setfn.hpp"
#include "choqlab/vecops.hpp"

namespace choqlab {

/// The affine map a0 + sum_j a_j x_j that agrees with phi at the n+1
/// indicator vertices of one ordering cone.  coefficients holds
/// (a0, a1, ..., an).
struct AffineRegion {
  std::vector<int> sigma;
  std::vector<double> coefficients;

  double value(std::span<const double> x) const;
};

/// Locates the ordering cone containing x and solves the
/// (n+1) x (n+1) vertex interpolation system by Gaussian elimination
/// with partial pivoting.  Intentionally shares no code with the
/// telescoping evaluators; capped at n <= 10 because the dense solve
/// is only meant for cross-checking.  SingularSystem signals an
/// internal error (the vertex system is provably nonsingular).
AffineRegion affine_region(const SetFunction& phi, std::span<const double> x);

/// affine_region(phi, x) applied to x.
double eval_affine_interpolation(const SetFunction& phi, std::span<const double> x);

/// Third evaluation path: f(x) = m(empty) + sum over nonempty A of
/// m(A) * min_{i in A} x_i, with m the Moebius coefficients of phi.
double eval_via_mobius(const SetFunction& phi, std::span<const double> x);
double eval_via_mobius(const MobiusRepresentation& m, std::span<const double> x);

/// Exhaustive check of one axiom over every vector built from the grid
/// values, with cut levels, scale factors and pair partners drawn from
/// the same grid.  Enumeration is lexicographic over the ascending
/// grid (outer vector first), so the reported witness is the least
/// one.  Throws BudgetExceeded when the raw enumeration would exceed
/// 10^7 instances.  Default tolerance; integer grids keep the
/// arithmetic exact.
Verdict brute_force_axiom_sweep(const RealFn& f, int n, std::vector<double> grid, Axiom axiom);

}  // namespace choqlab

#endif  // CHOQLAB_ORACLE_HPP
