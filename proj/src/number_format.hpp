#pragma once

#include <string>
#include <string_view>
#include <optional>

namespace cableloss::detail {

// Shortest decimal text that parses back to exactly `v`.
std::string format_number(double v);

// Text `t` such that parse(t) / scale == si exactly, preferring short output.
// Used where files hold mm or ohm/km and memory holds SI.
std::string format_scaled(double si, double scale);

std::optional<double> parse_double(std::string_view text);

}  // namespace cableloss::detail
