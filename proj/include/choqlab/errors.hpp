#ifndef CHOQLAB_ERRORS_HPP
#define CHOQLAB_ERRORS_HPP

#include <stdexcept>

namespace choqlab {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched lengths, out-of-range arity, wrong vector dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Non-finite or otherwise inadmissible numeric input.
class ValueError : public Error {
 public:
  using Error::Error;
};

/// Negative cut level passed to a clamp that requires c >= 0.
class NegativeCutError : public Error {
 public:
  using Error::Error;
};

/// A section was queried outside its declared half-line, or a point
/// lies outside the interval it must belong to.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A checker was handed a domain kind its axiom is not defined on.
class DomainKindError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampling could not satisfy a closure precondition.
class SamplerExhausted : public Error {
 public:
  using Error::Error;
};

/// A linear system that must be regular turned out singular.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// An exhaustive sweep would exceed its evaluation budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace choqlab

#endif  // CHOQLAB_ERRORS_HPP
