#include "cableloss/corrections.hpp"

#include <cmath>

namespace cableloss::corrections {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

}  // namespace

double conductor_proximity_correction(double crossing_pitch_m, double conductor_spacing,
                                      double armor_mean_diameter, double sheath_mean_diameter,
                                      double armor_wire_diameter, double mu_real) {
  require(mu_real >= 1.0, "mu' must be >= 1");
  require(crossing_pitch_m > 0.0 && conductor_spacing > 0.0 && armor_mean_diameter > 0.0 &&
              sheath_mean_diameter > 0.0 && armor_wire_diameter > 0.0,
          "geometry must be positive");
  const double bracket = 100.0 / (1.5 + crossing_pitch_m) *
                             (conductor_spacing / armor_mean_diameter) *
                             (sheath_mean_diameter / armor_wire_diameter) -
                         60.0;
  const double wire_ratio = armor_wire_diameter / armor_mean_diameter;
  return 1.0 + bracket * wire_ratio * wire_ratio * std::log(mu_real);
}

double corrected_conductor_resistance(double r_dc, double y_s, double y_p, double f_c) {
  require(r_dc > 0.0, "conductor DC resistance must be positive");
  return r_dc * (1.0 + y_s + y_p * f_c);
}

double sheath_eddy_correction(double lay_factor, double conductor_diameter,
                              double sheath_mean_diameter, double conductor_spacing) {
  require(lay_factor >= 1.0, "lay factor must be >= 1");
  require(conductor_diameter > 0.0 && sheath_mean_diameter > 0.0 && conductor_spacing > 0.0,
          "geometry must be positive");
  const double spacing_ratio = 2.0 * conductor_spacing / sheath_mean_diameter;
  const double r2 = spacing_ratio * spacing_ratio;
  return (6.6 + 2.6 * std::sqrt(lay_factor * lay_factor - 1.0)) /
         (5.2 * conductor_diameter / sheath_mean_diameter + r2 * r2);
}

double armor_presence_correction(double crossing_pitch_m, double mu_real) {
  require(mu_real >= 1.0, "mu' must be >= 1");
  require(crossing_pitch_m >= 0.0, "crossing pitch must be >= 0");
  return 6e-3 * (std::log(mu_real) - crossing_pitch_m * crossing_pitch_m);
}

double sheath_equivalent_resistance(double r_s_dc, double y_c, double y_a, Armoring armoring) {
  require(r_s_dc > 0.0, "sheath DC resistance must be positive");
  const double unarmored = r_s_dc * (1.0 + y_c);
  return armoring == Armoring::armored ? unarmored * (1.0 + y_a) : unarmored;
}

CorrectionFactors correction_factors(const CableSpec& spec, const DerivedGeometry& geom) {
  CorrectionFactors cf;
  cf.f_c = conductor_proximity_correction(geom.crossing_pitch, geom.conductor_spacing,
                                          spec.armor_mean_diameter, geom.sheath_mean_diameter,
                                          spec.armor_wire_diameter, spec.armor_mu_real);
  cf.y_c = sheath_eddy_correction(geom.lay_factor, spec.conductor_diameter,
                                  geom.sheath_mean_diameter, geom.conductor_spacing);
  cf.y_a = armor_presence_correction(geom.crossing_pitch, spec.armor_mu_real);
  if (cf.f_c < 1.0) cf.flags.push_back(make_warning(WarningCode::fc_below_one));
  if (cf.y_a < 0.0) cf.flags.push_back(make_warning(WarningCode::ya_negative));
  return cf;
}

}  // namespace cableloss::corrections
