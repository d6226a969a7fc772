#include "choqlab/builtins.hpp"

#include <algorithm>
#include <cmath>

namespace choqlab {

const std::vector<Builtin>& builtins() {
  static const std::vector<Builtin> table = {
      {"min2", 2, [](std::span<const double> x) { return std::min(x[0], x[1]); },
       "min(x1, x2); comonotonically additive"},
      {"max2", 2, [](std::span<const double> x) { return std::max(x[0], x[1]); },
       "max(x1, x2); comonotonically additive"},
      {"product2", 2, [](std::span<const double> x) { return x[0] * x[1]; },
       "x1 * x2; fails every additivity axiom"},
      {"abs1", 1, [](std::span<const double> x) { return std::fabs(x[0]); },
       "|x1|; median-additive but not comonotonically additive"},
  };
  return table;
}

const Builtin* find_builtin(std::string_view name) {
  for (const Builtin& b : builtins()) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

}  // namespace choqlab
