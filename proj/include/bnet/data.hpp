#ifndef BNET_DATA_HPP
#define BNET_DATA_HPP

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bnet/error.hpp"
#include "bnet/variable.hpp"

namespace bnet {

inline constexpr int kMissing = -1;

// Column-named categorical dataset. Cells hold state codes or kMissing;
// weights default to 1.0 per row when absent.
struct DataTable {
  std::vector<VariableMeta> columns;
  std::vector<std::vector<int>> rows;
  std::vector<double> weights;             // empty means all 1.0
  std::set<std::string> latent_columns;    // marked by simulation, dropped by fitting

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return columns.size(); }
  bool has_weights() const { return !weights.empty(); }

  double weight(std::size_t row) const { return weights.empty() ? 1.0 : weights[row]; }

  int column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i].name == name) return static_cast<int>(i);
    }
    fail(errc::unknown_variable, "no column '" + name + "' in data");
  }

  bool has_column(const std::string& name) const {
    for (const auto& c : columns) {
      if (c.name == name) return true;
    }
    return false;
  }

  int cardinality(const std::string& name) const {
    return columns[static_cast<std::size_t>(column_index(name))].cardinality();
  }

  bool column_has_missing(const std::string& name) const {
    const auto idx = static_cast<std::size_t>(column_index(name));
    for (const auto& row : rows) {
      if (row[idx] == kMissing) return true;
    }
    return false;
  }

  double total_weight() const {
    if (weights.empty()) return static_cast<double>(rows.size());
    double t = 0.0;
    for (double w : weights) t += w;
    return t;
  }

  void validate() const {
    std::set<std::string> names;
    for (const auto& c : columns) {
      c.validate();
      require(names.insert(c.name).second, errc::invalid_argument,
              "duplicate column '" + c.name + "'");
    }
    for (const auto& row : rows) {
      require(row.size() == columns.size(), errc::ragged_row, "row width differs from header");
      for (std::size_t j = 0; j < row.size(); ++j) {
        require(row[j] == kMissing || (row[j] >= 0 && row[j] < columns[j].cardinality()),
                errc::state_out_of_range, "cell code out of range in column '" + columns[j].name + "'");
      }
    }
    if (!weights.empty()) {
      require(weights.size() == rows.size(), errc::invalid_argument,
              "weight count differs from row count");
      for (double w : weights) {
        require(std::isfinite(w) && w >= 0.0, errc::negative_weight,
                "row weights must be finite and >= 0");
      }
    }
    for (const auto& l : latent_columns) {
      require(has_column(l), errc::unknown_variable, "latent flag on unknown column '" + l + "'");
    }
  }
};

}  // namespace bnet

#endif  // BNET_DATA_HPP
