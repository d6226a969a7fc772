#ifndef CHOQLAB_BUILTINS_HPP
#define CHOQLAB_BUILTINS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "choqlab/vecops.hpp"

namespace choqlab {

/// Compiled-in demo functions, so axiom checks can be run without
/// writing an extension file first.
struct Builtin {
  std::string name;
  int n;
  RealFn fn;
  std::string description;
};

const std::vector<Builtin>& builtins();

/// Looks a builtin up by name; nullptr when unknown.
const Builtin* find_builtin(std::string_view name);

}  // namespace choqlab

#endif  // CHOQLAB_BUILTINS_HPP
