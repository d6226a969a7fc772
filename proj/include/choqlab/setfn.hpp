#ifndef CHOQLAB_SETFN_HPP
#define CHOQLAB_SETFN_HPP

#include <cstdint>
#include <vector>

namespace choqlab {

/// A real-valued function on the subsets of {1,...,n}, stored densely.
/// Subset A is indexed by the bitmask sum_{i in A} 2^(i-1); index 0 is
/// the empty set.  The value at the empty set is stored as given, it is
/// not forced to zero.  Arity is capped at 16 because every algorithm
/// here walks all 2^n subsets.
class SetFunction {
 public:
  SetFunction(int n, std::vector<double> values);

  int n() const { return n_; }
  std::uint32_t subset_count() const { return std::uint32_t(1) << n_; }
  std::uint32_t full_mask() const { return subset_count() - 1; }
  double operator[](std::uint32_t mask) const { return values_[mask]; }
  const std::vector<double>& values() const { return values_; }

 private:
  int n_;
  std::vector<double> values_;
};

/// Mobius coefficients of a SetFunction, same dense indexing.
/// zeta_transform() inverts mobius_transform() exactly up to rounding.
struct MobiusRepresentation {
  int n = 0;
  std::vector<double> coefficients;
};

/// Validating constructor wrapper: requires 1 <= n <= 16, exactly 2^n
/// finite values.
SetFunction make_set_function(int n, std::vector<double> values);

/// True iff phi(empty) == 0 and phi is nondecreasing under set
/// inclusion.  Monotonicity is verified on covering pairs only, which
/// is equivalent and O(n 2^n).
bool is_capacity(const SetFunction& phi);

MobiusRepresentation mobius_transform(const SetFunction& phi);
SetFunction zeta_transform(const MobiusRepresentation& m);

enum class SetFunctionKind { general, capacity, capacity_normalized };

/// Deterministic generator: the same (n, seed, kind) always produces
/// the same values.  All kinds set phi(empty) = 0.  Capacities are
/// built by accumulating positive increments along a random linear
/// extension of the subset lattice; the normalized kind additionally
/// rescales so that phi(full) = 1.
SetFunction random_set_function(int n, std::uint64_t seed, SetFunctionKind kind);

}  // namespace choqlab

#endif  // CHOQLAB_SETFN_HPP
