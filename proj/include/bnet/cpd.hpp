#ifndef BNET_CPD_HPP
#define BNET_CPD_HPP

#include <cmath>
#include <string>
#include <vector>

#include "bnet/factor.hpp"

namespace bnet {

// P(child | parents) as a factor with scope (parents..., child). With the
// last-fastest layout each parent configuration owns one contiguous block of
// child entries, and every block must sum to 1 within 1e-9. Construction
// repairs nothing: off columns are rejected.
class TabularCpd {
 public:
  TabularCpd() = default;

  TabularCpd(std::string child, std::vector<std::string> parents, DiscreteFactor factor)
      : child_(std::move(child)), parents_(std::move(parents)), factor_(std::move(factor)) {
    validate();
  }

  TabularCpd(std::string child, int child_card, std::vector<std::string> parents,
             std::vector<int> parent_cards, std::vector<double> values)
      : child_(std::move(child)), parents_(std::move(parents)) {
    std::vector<std::string> scope = parents_;
    scope.push_back(child_);
    std::vector<int> cards = std::move(parent_cards);
    cards.push_back(child_card);
    factor_ = DiscreteFactor(std::move(scope), std::move(cards), std::move(values));
    validate();
  }

  // Point mass: P(child = state) = 1 regardless of parents (used by hard
  // interventions, which sever the parents anyway).
  static TabularCpd point_mass(const std::string& child, int child_card, int state) {
    require(state >= 0 && state < child_card, errc::state_out_of_range,
            "point mass state out of range for '" + child + "'");
    std::vector<double> values(static_cast<std::size_t>(child_card), 0.0);
    values[static_cast<std::size_t>(state)] = 1.0;
    return TabularCpd(child, child_card, {}, {}, std::move(values));
  }

  static TabularCpd uniform(const std::string& child, int child_card,
                            const std::vector<std::string>& parents,
                            const std::vector<int>& parent_cards) {
    std::size_t q = 1;
    for (int c : parent_cards) q *= static_cast<std::size_t>(c);
    std::vector<double> values(q * static_cast<std::size_t>(child_card),
                               1.0 / static_cast<double>(child_card));
    return TabularCpd(child, child_card, parents, parent_cards, std::move(values));
  }

  const std::string& child() const { return child_; }
  const std::vector<std::string>& parents() const { return parents_; }
  const DiscreteFactor& factor() const { return factor_; }

  int child_cardinality() const { return factor_.cardinalities().back(); }

  std::size_t parent_configurations() const {
    return factor_.size() / static_cast<std::size_t>(child_cardinality());
  }

  // Distribution over child states for one parent configuration, indexed in
  // the factor's row-major parent order.
  std::vector<double> column(std::size_t parent_config) const {
    const int r = child_cardinality();
    std::vector<double> out(static_cast<std::size_t>(r));
    const std::size_t base = parent_config * static_cast<std::size_t>(r);
    for (int k = 0; k < r; ++k) out[static_cast<std::size_t>(k)] = factor_.values()[base + k];
    return out;
  }

  void validate() const {
    require(!child_.empty(), errc::invalid_argument, "CPD child must be named");
    require(factor_.scope().size() == parents_.size() + 1, errc::invalid_argument,
            "CPD factor scope must be parents followed by the child");
    for (std::size_t i = 0; i < parents_.size(); ++i) {
      require(factor_.scope()[i] == parents_[i], errc::invalid_argument,
              "CPD factor scope must list parents in order");
    }
    require(factor_.scope().back() == child_, errc::invalid_argument,
            "CPD factor scope must end with the child");
    const int r = child_cardinality();
    for (std::size_t j = 0; j < parent_configurations(); ++j) {
      double s = 0.0;
      for (int k = 0; k < r; ++k) s += factor_.values()[j * static_cast<std::size_t>(r) + k];
      require(std::fabs(s - 1.0) <= 1e-9, errc::invalid_argument,
              "CPD column for '" + child_ + "' sums to " + std::to_string(s) + ", not 1");
    }
  }

 private:
  std::string child_;
  std::vector<std::string> parents_;
  DiscreteFactor factor_;
};

}  // namespace bnet

#endif  // BNET_CPD_HPP
