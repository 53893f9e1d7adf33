#include "number_format.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>

namespace cableloss::detail {

std::string format_number(double v) { return fmt::format("{}", v); }

std::optional<double> parse_double(std::string_view text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return v;
}

std::string format_scaled(double si, double scale) {
  if (scale == 1.0 || !std::isfinite(si)) return format_number(si);
  const double centre = si * scale;
  std::string best;
  // The original decimal lies within a few ulps of si * scale.
  double candidate = centre;
  for (int k = 0; k < 4; ++k) candidate = std::nextafter(candidate, -INFINITY);
  for (int k = -4; k <= 4; ++k, candidate = std::nextafter(candidate, INFINITY)) {
    const std::string text = format_number(candidate);
    if (candidate / scale == si && (best.empty() || text.size() < best.size())) best = text;
  }
  return best.empty() ? format_number(centre) : best;
}

}  // namespace cableloss::detail
