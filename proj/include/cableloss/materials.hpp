#pragma once

// Resistivity (ohm*m at 20 degC) and linear temperature coefficient (1/K)
// from the IEC 60287-1-1 material table. Edit here; per-cable overrides go in
// the [materials] section of a cable file.

namespace cableloss {

struct MaterialProps {
  double resistivity_20c = 0.0;
  double temp_coefficient = 0.0;

  bool operator==(const MaterialProps&) const = default;
};

namespace materials {

inline constexpr MaterialProps copper{1.7241e-8, 3.93e-3};
inline constexpr MaterialProps aluminum{2.8264e-8, 4.03e-3};
inline constexpr MaterialProps lead{21.4e-8, 4.0e-3};
inline constexpr MaterialProps steel{13.8e-8, 4.5e-3};

}  // namespace materials
}  // namespace cableloss
