#include "cableloss/error.hpp"

namespace cableloss {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::invalid_spec: return "invalid-spec";
    case ErrorCode::parse: return "parse";
    case ErrorCode::unit: return "unit";
    case ErrorCode::config: return "config";
    case ErrorCode::method_assumption: return "method-assumption-violated";
    case ErrorCode::degenerate_input: return "degenerate-input";
    case ErrorCode::missing_data: return "missing-data";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string field,
             int line, int column)
    : std::runtime_error(message),
      code_(code),
      field_(std::move(field)),
      line_(line),
      column_(column) {}

const char* warning_tag(WarningCode code) {
  switch (code) {
    case WarningCode::nonphysical_reactance: return "nonphysical-reactance";
    case WarningCode::negative_lambda2: return "negative-lambda2";
    case WarningCode::fc_below_one: return "fc-below-one";
    case WarningCode::ya_negative: return "ya-negative";
    case WarningCode::negative_armor_loss: return "negative-armor-loss";
    case WarningCode::armored_power_below_unarmored: return "armored-power-below-unarmored";
  }
  return "unknown";
}

Warning make_warning(WarningCode code) {
  switch (code) {
    case WarningCode::nonphysical_reactance:
      return {code, "sheath reactance: 2s <= d gives a non-positive reactance"};
    case WarningCode::negative_lambda2:
      return {code, "lambda2 is negative: (R_c/R_s)*lambda1' exceeds 1, outside the armor-loss model"};
    case WarningCode::fc_below_one:
      return {code, "f_c < 1: geometric bracket is negative, outside the fitted domain"};
    case WarningCode::ya_negative:
      return {code, "y_a < 0: CP^2 exceeds ln(mu'), outside the fitted domain"};
    case WarningCode::negative_armor_loss:
      return {code, "estimated armor loss is negative: measurements are inconsistent with the method"};
    case WarningCode::armored_power_below_unarmored:
      return {code, "armored test power is below the unarmored test power"};
  }
  return {code, "unknown warning"};
}

}  // namespace cableloss
