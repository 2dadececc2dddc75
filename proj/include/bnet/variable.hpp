#ifndef BNET_VARIABLE_HPP
#define BNET_VARIABLE_HPP

#include <set>
#include <string>
#include <vector>

#include "bnet/error.hpp"

namespace bnet {

// Named discrete variable with an ordered list of state labels. States are
// addressed by integer code everywhere in the library; labels matter only at
// the I/O boundary.
struct VariableMeta {
  std::string name;
  std::vector<std::string> states;

  VariableMeta() = default;
  VariableMeta(std::string n, std::vector<std::string> s) : name(std::move(n)), states(std::move(s)) {
    validate();
  }

  int cardinality() const { return static_cast<int>(states.size()); }

  int state_code(const std::string& label) const {
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i] == label) return static_cast<int>(i);
    }
    fail(errc::unknown_state, "variable '" + name + "' has no state '" + label + "'");
  }

  void validate() const {
    require(!name.empty(), errc::invalid_argument, "variable name must be nonempty");
    require(states.size() >= 2, errc::invalid_argument,
            "variable '" + name + "' needs at least 2 states, got " + std::to_string(states.size()));
    std::set<std::string> seen(states.begin(), states.end());
    require(seen.size() == states.size(), errc::invalid_argument,
            "variable '" + name + "' has duplicate state labels");
  }
};

}  // namespace bnet

#endif  // BNET_VARIABLE_HPP
