#ifndef BNET_ERROR_HPP
#define BNET_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bnet {

enum class errc {
  cycle_detected,
  unknown_variable,
  state_out_of_range,
  cardinality_mismatch,
  zero_mass,
  state_space_too_large,
  not_extendable,
  insufficient_data,
  invalid_alpha,
  invalid_constraints,
  missing_data_present,
  invalid_prior,
  no_observed_data,
  invalid_fixed_order,
  impossible_evidence,
  not_calibrated,
  incompatible_spec,
  all_zero_weights,
  no_directed_edge,
  log_zero,
  parse_error,
  semantic_error,
  not_bayes,
  ragged_row,
  unknown_state,
  negative_weight,
  invalid_argument,
};

inline std::string_view to_string(errc c) {
  switch (c) {
    case errc::cycle_detected: return "cycle_detected";
    case errc::unknown_variable: return "unknown_variable";
    case errc::state_out_of_range: return "state_out_of_range";
    case errc::cardinality_mismatch: return "cardinality_mismatch";
    case errc::zero_mass: return "zero_mass";
    case errc::state_space_too_large: return "state_space_too_large";
    case errc::not_extendable: return "not_extendable";
    case errc::insufficient_data: return "insufficient_data";
    case errc::invalid_alpha: return "invalid_alpha";
    case errc::invalid_constraints: return "invalid_constraints";
    case errc::missing_data_present: return "missing_data_present";
    case errc::invalid_prior: return "invalid_prior";
    case errc::no_observed_data: return "no_observed_data";
    case errc::invalid_fixed_order: return "invalid_fixed_order";
    case errc::impossible_evidence: return "impossible_evidence";
    case errc::not_calibrated: return "not_calibrated";
    case errc::incompatible_spec: return "incompatible_spec";
    case errc::all_zero_weights: return "all_zero_weights";
    case errc::no_directed_edge: return "no_directed_edge";
    case errc::log_zero: return "log_zero";
    case errc::parse_error: return "parse_error";
    case errc::semantic_error: return "semantic_error";
    case errc::not_bayes: return "not_bayes";
    case errc::ragged_row: return "ragged_row";
    case errc::unknown_state: return "unknown_state";
    case errc::negative_weight: return "negative_weight";
    case errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

inline void require(bool condition, errc code, const std::string& message) {
  if (!condition) fail(code, message);
}

// Position of a problem in a parsed text, 1-based. Errors abort the parse,
// warnings accumulate.
struct ParseDiagnostic {
  int line = 1;
  int column = 1;
  std::string message;
  enum class Severity { error, warning } severity = Severity::error;
};

class parse_failure : public error {
 public:
  parse_failure(errc code, ParseDiagnostic diagnostic)
      : error(code, "line " + std::to_string(diagnostic.line) + ", column " +
                        std::to_string(diagnostic.column) + ": " + diagnostic.message),
        diagnostic_(std::move(diagnostic)) {}

  const ParseDiagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

}  // namespace bnet

#endif  // BNET_ERROR_HPP
