#ifndef BNET_FACTOR_HPP
#define BNET_FACTOR_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bnet/error.hpp"

namespace bnet {

// Dense nonnegative table over an ordered scope of discrete variables.
// Layout is row-major with the LAST scope variable varying fastest; every
// table in the library (and both file formats) uses this one convention.
class DiscreteFactor {
 public:
  DiscreteFactor() : values_(1, 1.0) {}  // unit factor: empty scope, value 1

  DiscreteFactor(std::vector<std::string> scope, std::vector<int> cards,
                 std::vector<double> values)
      : scope_(std::move(scope)), cards_(std::move(cards)), values_(std::move(values)) {
    validate();
  }

  static DiscreteFactor unit() { return DiscreteFactor(); }

  static DiscreteFactor constant(double v) {
    require(v >= 0.0 && std::isfinite(v), errc::invalid_argument, "factor values must be finite and >= 0");
    DiscreteFactor f;
    f.values_[0] = v;
    return f;
  }

  const std::vector<std::string>& scope() const { return scope_; }
  const std::vector<int>& cardinalities() const { return cards_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }

  std::size_t size() const { return values_.size(); }

  bool in_scope(const std::string& var) const {
    return std::find(scope_.begin(), scope_.end(), var) != scope_.end();
  }

  int scope_index(const std::string& var) const {
    for (std::size_t i = 0; i < scope_.size(); ++i) {
      if (scope_[i] == var) return static_cast<int>(i);
    }
    fail(errc::unknown_variable, "variable '" + var + "' not in factor scope");
  }

  int cardinality_of(const std::string& var) const { return cards_[scope_index(var)]; }

  // Strides for the row-major/last-fastest layout.
  std::vector<std::size_t> strides() const {
    std::vector<std::size_t> s(scope_.size(), 1);
    for (int i = static_cast<int>(scope_.size()) - 2; i >= 0; --i) {
      s[i] = s[i + 1] * static_cast<std::size_t>(cards_[i + 1]);
    }
    return s;
  }

  std::size_t linear_index(const std::vector<int>& assignment) const {
    std::size_t idx = 0, stride = 1;
    for (int i = static_cast<int>(scope_.size()) - 1; i >= 0; --i) {
      idx += static_cast<std::size_t>(assignment[i]) * stride;
      stride *= static_cast<std::size_t>(cards_[i]);
    }
    return idx;
  }

  double at(const std::vector<int>& assignment) const { return values_[linear_index(assignment)]; }

  double total_mass() const {
    double t = 0.0;
    for (double v : values_) t += v;
    return t;
  }

  void validate() const {
    require(scope_.size() == cards_.size(), errc::invalid_argument, "scope/cardinality length mismatch");
    std::set<std::string> seen(scope_.begin(), scope_.end());
    require(seen.size() == scope_.size(), errc::invalid_argument, "duplicate variable in factor scope");
    std::size_t expect = 1;
    for (int c : cards_) {
      require(c >= 1, errc::invalid_argument, "factor cardinalities must be >= 1");
      expect *= static_cast<std::size_t>(c);
    }
    require(values_.size() == expect, errc::invalid_argument,
            "factor value count " + std::to_string(values_.size()) + " != product of cardinalities " +
                std::to_string(expect));
    for (double v : values_) {
      require(std::isfinite(v) && v >= 0.0, errc::invalid_argument, "factor values must be finite and >= 0");
    }
  }

 private:
  std::vector<std::string> scope_;
  std::vector<int> cards_;
  std::vector<double> values_;
};

namespace detail {

// Odometer over an assignment vector; returns false once it wraps around.
inline bool advance_assignment(std::vector<int>& assignment, const std::vector<int>& cards) {
  for (int i = static_cast<int>(assignment.size()) - 1; i >= 0; --i) {
    if (++assignment[i] < cards[i]) return true;
    assignment[i] = 0;
  }
  return false;
}

}  // namespace detail

// Pointwise product over the joint assignment. Result scope is a's order
// followed by b's variables not already present.
inline DiscreteFactor factor_product(const DiscreteFactor& a, const DiscreteFactor& b) {
  std::vector<std::string> scope = a.scope();
  std::vector<int> cards = a.cardinalities();
  for (std::size_t i = 0; i < b.scope().size(); ++i) {
    const std::string& var = b.scope()[i];
    if (!a.in_scope(var)) {
      scope.push_back(var);
      cards.push_back(b.cardinalities()[i]);
    } else {
      require(a.cardinality_of(var) == b.cardinalities()[i], errc::cardinality_mismatch,
              "variable '" + var + "' has different cardinalities in the two factors");
    }
  }

  const std::size_t n_vars = scope.size();
  std::size_t total = 1;
  for (int c : cards) total *= static_cast<std::size_t>(c);

  // Per-result-variable strides into a and b (zero when absent).
  const auto a_strides_base = a.strides();
  const auto b_strides_base = b.strides();
  std::vector<std::size_t> a_str(n_vars, 0), b_str(n_vars, 0);
  for (std::size_t i = 0; i < n_vars; ++i) {
    if (a.in_scope(scope[i])) a_str[i] = a_strides_base[a.scope_index(scope[i])];
    if (b.in_scope(scope[i])) b_str[i] = b_strides_base[b.scope_index(scope[i])];
  }

  std::vector<double> values(total);
  std::vector<int> assign(n_vars, 0);
  std::size_t ai = 0, bi = 0;
  for (std::size_t out = 0; out < total; ++out) {
    values[out] = a.values()[ai] * b.values()[bi];
    for (int i = static_cast<int>(n_vars) - 1; i >= 0; --i) {
      if (++assign[i] < cards[i]) {
        ai += a_str[i];
        bi += b_str[i];
        break;
      }
      assign[i] = 0;
      ai -= a_str[i] * static_cast<std::size_t>(cards[i] - 1);
      bi -= b_str[i] * static_cast<std::size_t>(cards[i] - 1);
    }
  }
  return DiscreteFactor(std::move(scope), std::move(cards), std::move(values));
}

// Sums out `vars`; surviving scope keeps its order.
inline DiscreteFactor factor_marginalize(const DiscreteFactor& f, const std::set<std::string>& vars) {
  for (const auto& v : vars) {
    if (!f.in_scope(v)) fail(errc::unknown_variable, "cannot marginalize '" + v + "': not in scope");
  }
  std::vector<std::string> scope;
  std::vector<int> cards;
  for (std::size_t i = 0; i < f.scope().size(); ++i) {
    if (!vars.count(f.scope()[i])) {
      scope.push_back(f.scope()[i]);
      cards.push_back(f.cardinalities()[i]);
    }
  }
  std::size_t total = 1;
  for (int c : cards) total *= static_cast<std::size_t>(c);
  std::vector<double> values(total, 0.0);

  // Destination strides aligned with the source scope (0 for summed-out vars).
  std::vector<std::size_t> dst_str(f.scope().size(), 0);
  {
    std::size_t stride = 1;
    for (int i = static_cast<int>(scope.size()) - 1; i >= 0; --i) {
      for (std::size_t j = 0; j < f.scope().size(); ++j) {
        if (f.scope()[j] == scope[i]) dst_str[j] = stride;
      }
      stride *= static_cast<std::size_t>(cards[i]);
    }
  }

  std::vector<int> assign(f.scope().size(), 0);
  const auto& src_cards = f.cardinalities();
  std::size_t di = 0;
  for (std::size_t si = 0; si < f.size(); ++si) {
    values[di] += f.values()[si];
    for (int i = static_cast<int>(assign.size()) - 1; i >= 0; --i) {
      if (++assign[i] < src_cards[i]) {
        di += dst_str[i];
        break;
      }
      assign[i] = 0;
      di -= dst_str[i] * static_cast<std::size_t>(src_cards[i] - 1);
    }
  }
  return DiscreteFactor(std::move(scope), std::move(cards), std::move(values));
}

// Slice retaining entries consistent with the assignments; assigned
// variables leave the scope.
inline DiscreteFactor factor_reduce(const DiscreteFactor& f,
                                    const std::vector<std::pair<std::string, int>>& assignments) {
  std::map<std::string, int> fixed;
  for (const auto& [var, state] : assignments) {
    int idx = f.scope_index(var);  // throws unknown_variable
    require(state >= 0 && state < f.cardinalities()[idx], errc::state_out_of_range,
            "state " + std::to_string(state) + " out of range for '" + var + "'");
    fixed[var] = state;
  }

  std::vector<std::string> scope;
  std::vector<int> cards;
  for (std::size_t i = 0; i < f.scope().size(); ++i) {
    if (!fixed.count(f.scope()[i])) {
      scope.push_back(f.scope()[i]);
      cards.push_back(f.cardinalities()[i]);
    }
  }
  std::size_t total = 1;
  for (int c : cards) total *= static_cast<std::size_t>(c);
  std::vector<double> values(total);

  const auto src_strides = f.strides();
  std::size_t base = 0;
  for (const auto& [var, state] : fixed) base += src_strides[f.scope_index(var)] * static_cast<std::size_t>(state);

  std::vector<std::size_t> surv_str;
  for (const auto& v : scope) surv_str.push_back(src_strides[f.scope_index(v)]);

  std::vector<int> assign(scope.size(), 0);
  std::size_t si = base;
  for (std::size_t di = 0; di < total; ++di) {
    values[di] = f.values()[si];
    for (int i = static_cast<int>(scope.size()) - 1; i >= 0; --i) {
      if (++assign[i] < cards[i]) {
        si += surv_str[i];
        break;
      }
      assign[i] = 0;
      si -= surv_str[i] * static_cast<std::size_t>(cards[i] - 1);
    }
  }
  return DiscreteFactor(std::move(scope), std::move(cards), std::move(values));
}

// Scales to total mass 1. Zero mass signals impossible evidence downstream.
inline DiscreteFactor factor_normalize(const DiscreteFactor& f) {
  const double total = f.total_mass();
  require(total > 0.0, errc::zero_mass, "cannot normalize a factor with zero total mass");
  std::vector<double> values = f.values();
  for (double& v : values) v /= total;
  return DiscreteFactor(f.scope(), f.cardinalities(), std::move(values));
}

// Reorders the scope to `new_scope` (a permutation of the old one).
inline DiscreteFactor factor_permute(const DiscreteFactor& f, const std::vector<std::string>& new_scope) {
  require(new_scope.size() == f.scope().size(), errc::invalid_argument,
          "permutation must cover the whole scope");
  std::vector<int> cards;
  std::vector<std::size_t> src_str;
  const auto strides = f.strides();
  for (const auto& v : new_scope) {
    int idx = f.scope_index(v);
    cards.push_back(f.cardinalities()[idx]);
    src_str.push_back(strides[idx]);
  }
  std::size_t total = f.size();
  std::vector<double> values(total);
  std::vector<int> assign(new_scope.size(), 0);
  std::size_t si = 0;
  for (std::size_t di = 0; di < total; ++di) {
    values[di] = f.values()[si];
    for (int i = static_cast<int>(assign.size()) - 1; i >= 0; --i) {
      if (++assign[i] < cards[i]) {
        si += src_str[i];
        break;
      }
      assign[i] = 0;
      si -= src_str[i] * static_cast<std::size_t>(cards[i] - 1);
    }
  }
  return DiscreteFactor(new_scope, std::move(cards), std::move(values));
}

// Canonical presentation: scope sorted lexicographically. Queries return
// factors in this form so outputs are independent of request order.
inline DiscreteFactor factor_sort_scope(const DiscreteFactor& f) {
  std::vector<std::string> scope = f.scope();
  std::sort(scope.begin(), scope.end());
  if (scope == f.scope()) return f;
  return factor_permute(f, scope);
}

}  // namespace bnet

#endif  // BNET_FACTOR_HPP
