#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cableloss {

enum class ErrorCode {
  invalid_argument,
  invalid_spec,
  parse,
  unit,
  config,
  method_assumption,
  degenerate_input,
  missing_data,
  io,
};

const char* to_string(ErrorCode code);

// Single exception type for the library. `field` names the offending key or
// parameter when there is one; parse errors also carry a 1-based location.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {},
        int line = 0, int column = 0);

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  std::string field_;
  int line_;
  int column_;
};

// Non-fatal diagnostics. Inputs outside the model's intended domain still
// produce numbers; the warning travels with them.
enum class WarningCode {
  nonphysical_reactance,   // 2s <= d, X <= 0
  negative_lambda2,
  fc_below_one,
  ya_negative,
  negative_armor_loss,
  armored_power_below_unarmored,
};

struct Warning {
  WarningCode code;
  std::string message;

  bool operator==(const Warning&) const = default;
};

using Warnings = std::vector<Warning>;

Warning make_warning(WarningCode code);
const char* warning_tag(WarningCode code);

inline bool has_warning(const Warnings& ws, WarningCode code) {
  for (const auto& w : ws) {
    if (w.code == code) return true;
  }
  return false;
}

}  // namespace cableloss
