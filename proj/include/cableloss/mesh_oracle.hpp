#pragma once

#include <array>
#include <complex>

// Filament model of three conductors and three solidly bonded sheaths in a
// symmetric trefoil. Each sheath is a thin tube coaxial with its conductor.
// Flux linkages are taken against an arbitrary reference radius; the zero-sum
// of conductor and sheath currents makes the result independent of it.

namespace cableloss::oracle {

using Phasor = std::complex<double>;
using PhasorTriple = std::array<Phasor, 3>;

struct CirculatingCurrents {
  PhasorTriple conductor;
  PhasorTriple sheath;
};

// Balanced positive-sequence conductor currents of rms magnitude `i_c`.
// Spacing and diameter in metres. Throws Error(degenerate_input) when the
// loop system is singular.
CirculatingCurrents solve_circulating_currents(double r_s, double omega, double conductor_spacing,
                                               double sheath_mean_diameter, double i_c,
                                               double reference_radius = 1.0);

// Sheath-to-conductor loss ratio from the solved currents.
double oracle_lambda1(double r_s, double r_c_ac, double omega, double conductor_spacing,
                      double sheath_mean_diameter, double reference_radius = 1.0);

}  // namespace cableloss::oracle
