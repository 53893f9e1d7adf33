#pragma once

#include <limits>
#include <optional>

#include "cableloss/cable_model.hpp"
#include "cableloss/error.hpp"
#include "cableloss/materials.hpp"

namespace cableloss::iec {

struct OperatingPoint {
  double frequency = 50.0;      // Hz
  double ambient_temp = 20.0;   // degC
  double conductor_current = 0.0;  // A rms

  double omega() const;
  bool operator==(const OperatingPoint&) const = default;
};

void validate(const OperatingPoint& op);

// Material data for one cable. Optional DC resistances (ohm/m at 20 degC)
// replace the geometric estimate when a measured value is known.
struct MaterialSet {
  MaterialProps conductor = materials::copper;
  MaterialProps sheath = materials::lead;
  MaterialProps armor = materials::steel;
  std::optional<double> conductor_dc_20;
  std::optional<double> sheath_dc_20;
  std::optional<double> armor_dc_20;
  double k_s = 1.0;
  double k_p = 1.0;

  bool operator==(const MaterialSet&) const = default;
};

MaterialSet default_materials(const CableSpec& spec);

double dc_resistance_at_temp(double r_dc_20, double alpha, double theta);

// Geometric DC resistances at 20 degC, ohm/m.
double conductor_dc_resistance_20(const CableSpec& spec, const MaterialSet& m);
double sheath_dc_resistance_20(const CableSpec& spec, const MaterialSet& m);
// Includes the helical length of the wires over one lay.
double armor_dc_resistance_20(const CableSpec& spec, const MaterialSet& m);

double skin_effect_factor(double r_dc, double frequency, double k_s = 1.0);
// Two/three-core cable with circular conductors.
double proximity_effect_factor(double r_dc, double frequency, double conductor_diameter,
                               double conductor_spacing, double k_p = 1.0);

double conductor_ac_resistance(double r_dc, double y_s, double y_p);

// 2 omega 1e-7 ln(2s/d), ohm/m. s and d in any common unit. Returns a
// non-positive value when 2s <= d; callers attach the warning.
double sheath_reactance(double omega, double conductor_spacing, double sheath_mean_diameter);
bool reactance_is_physical(double conductor_spacing, double sheath_mean_diameter);

// Circulating-current sheath loss factor for SL-type cables.
double lambda1_prime(double r_s, double r_c_ac, double reactance);

// Inputs of the sheath eddy-current loss factor. Unset values are NaN and
// make lambda1_doubleprime throw a config error naming them. Lengths in m.
struct EddyCurrentInputs {
  static constexpr double unset = std::numeric_limits<double>::quiet_NaN();
  double sheath_resistance = unset;      // R_s, ohm/m
  double conductor_ac_resistance = unset;  // R_c, ohm/m
  double omega = unset;
  double sheath_resistivity = unset;     // ohm*m at the evaluation temperature
  double sheath_thickness = unset;       // t_s
  double sheath_outer_diameter = unset;  // D_s
  double sheath_mean_diameter = unset;   // d
  double conductor_spacing = unset;      // s
};

struct EddyCurrentTerms {
  double g_s = 0.0;
  double lambda0 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double beta1 = 0.0;  // 1/m
  double m = 0.0;
  double lambda1_doubleprime = 0.0;
};

// Eddy-current loss factor, evaluated as for three single-core cables in
// trefoil (no three-core formula exists in the standard).
EddyCurrentTerms eddy_current_terms(const EddyCurrentInputs& in);
double lambda1_doubleprime(const EddyCurrentInputs& in);

// 1.23 (R_a/R_c) (2c/D_a)^2 (1 - (R_c/R_s) lambda1') / ((2.77 R_a 1e6/omega)^2 + 1),
// resistances in ohm/m. c and D_a in any common unit.
double lambda2(double r_a, double r_c_ac, double r_s, double core_offset,
               double armor_mean_diameter, double lambda1_prime, double omega);

// Whether the SB eddy-current factor is neglected (as the standard does for
// SL-type cables) or included.
enum class EddyMode { neglected, included };

struct ResistanceSet {
  double conductor_dc = 0.0;
  double conductor_ac = 0.0;
  double sheath_dc = 0.0;
  double armor_dc = 0.0;
  double y_s = 0.0;
  double y_p = 0.0;
};

ResistanceSet cable_resistances(const CableSpec& spec, const MaterialSet& m,
                                const OperatingPoint& op);

struct LossBreakdown {
  double p_c = 0.0;  // W/m, all three conductors
  double p_s = 0.0;
  double p_a = 0.0;
  double lambda1_prime = 0.0;
  double lambda1_doubleprime = 0.0;
  double lambda2 = 0.0;
  double reactance = 0.0;
  ResistanceSet resistances;
  EddyMode mode = EddyMode::included;
  Warnings warnings;
};

LossBreakdown allocate_iec(const CableSpec& spec, const MaterialSet& m, const OperatingPoint& op,
                           EddyMode mode = EddyMode::included);

}  // namespace cableloss::iec
