#pragma once

#include "cableloss/cable_model.hpp"
#include "cableloss/error.hpp"

// Closed-form corrections to the standard's conductor and sheath losses for
// armored three-core cables. The crossing pitch enters f_c and y_a in metres;
// every other argument appears only in ratios.

namespace cableloss::corrections {

struct CorrectionFactors {
  double f_c = 1.0;  // conductor proximity-effect correction
  double y_c = 0.0;  // unarmored sheath eddy correction
  double y_a = 0.0;  // armor presence correction
  Warnings flags;    // out-of-fit-domain conditions
};

double conductor_proximity_correction(double crossing_pitch_m, double conductor_spacing,
                                      double armor_mean_diameter, double sheath_mean_diameter,
                                      double armor_wire_diameter, double mu_real);

double corrected_conductor_resistance(double r_dc, double y_s, double y_p, double f_c);

double sheath_eddy_correction(double lay_factor, double conductor_diameter,
                              double sheath_mean_diameter, double conductor_spacing);

double armor_presence_correction(double crossing_pitch_m, double mu_real);

enum class Armoring { unarmored, armored };

double sheath_equivalent_resistance(double r_s_dc, double y_c, double y_a, Armoring armoring);

// All three factors at the cable's own geometry and mu'. mu'' is ignored.
CorrectionFactors correction_factors(const CableSpec& spec, const DerivedGeometry& geom);

}  // namespace cableloss::corrections
