#include "cableloss/cable_model.hpp"

#include <cmath>
#include <numbers>

#include "cableloss/error.hpp"

namespace cableloss {

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::invalid_spec,
                std::string(field) + " must be a positive finite value", field);
  }
}

}  // namespace

double crossing_pitch(double phase_lay_length, double armor_lay_length) {
  require_positive(phase_lay_length, "L_c");
  require_positive(armor_lay_length, "L_a");
  return 1.0 / (1.0 / armor_lay_length + 1.0 / phase_lay_length);
}

double model_length(double crossing_pitch, int armor_wire_count) {
  if (!(crossing_pitch > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "crossing pitch must be positive", "CP");
  }
  if (armor_wire_count < 1) {
    throw Error(ErrorCode::invalid_argument, "armor wire count must be >= 1", "N");
  }
  return crossing_pitch / armor_wire_count;
}

double boundary_rotation(double model_length, double phase_lay_length) {
  if (!(model_length > 0.0) || !(phase_lay_length > 0.0)) {
    throw Error(ErrorCode::invalid_argument,
                "model length and phase lay length must be positive");
  }
  return 2.0 * std::numbers::pi * model_length / phase_lay_length;
}

double lay_factor(double core_offset, double phase_lay_length) {
  if (!(phase_lay_length > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "phase lay length must be positive", "L_c");
  }
  if (core_offset < 0.0) {
    throw Error(ErrorCode::invalid_argument, "core offset must be >= 0", "c");
  }
  const double twist = 2.0 * std::numbers::pi * core_offset / phase_lay_length;
  return std::sqrt(1.0 + twist * twist);
}

double trefoil_spacing(double core_offset) { return std::sqrt(3.0) * core_offset; }

double sheath_mean_diameter(double sheath_outer_diameter, double sheath_thickness) {
  return sheath_outer_diameter - sheath_thickness;
}

void validate(const CableSpec& spec) {
  require_positive(spec.voltage_kv, "voltage");
  require_positive(spec.rated_current, "rated_current");
  require_positive(spec.conductor_diameter, "d_c");
  require_positive(spec.sheath_outer_diameter, "d_s");
  require_positive(spec.sheath_thickness, "t_s");
  require_positive(spec.core_offset, "c");
  require_positive(spec.armor_wire_diameter, "d_a");
  require_positive(spec.armor_mean_diameter, "D_a");
  require_positive(spec.phase_lay_length, "L_c");
  require_positive(spec.armor_lay_length, "L_a");
  if (spec.armor_wire_count < 1) {
    throw Error(ErrorCode::invalid_spec, "N (armor wire count) must be >= 1", "N");
  }
  if (!(spec.sheath_outer_diameter > 2.0 * spec.sheath_thickness)) {
    throw Error(ErrorCode::invalid_spec, "d_s must exceed 2*t_s", "t_s");
  }
  if (!(spec.armor_mean_diameter > spec.armor_wire_diameter)) {
    throw Error(ErrorCode::invalid_spec, "D_a must exceed d_a", "D_a");
  }
  if (!(spec.armor_mu_real >= 1.0) || !std::isfinite(spec.armor_mu_real)) {
    throw Error(ErrorCode::invalid_spec, "mu_real must be >= 1", "mu_real");
  }
  if (!(spec.armor_mu_imag >= 0.0) || !std::isfinite(spec.armor_mu_imag)) {
    throw Error(ErrorCode::invalid_spec, "mu_imag must be >= 0", "mu_imag");
  }
  if (spec.cross_section < 0.0) {
    throw Error(ErrorCode::invalid_spec, "cross_section must be >= 0", "cross_section");
  }
  const double s = trefoil_spacing(spec.core_offset);
  const double d = sheath_mean_diameter(spec.sheath_outer_diameter, spec.sheath_thickness);
  if (!(2.0 * s / d > 1.0)) {
    throw Error(ErrorCode::invalid_spec,
                "2s/d must exceed 1 (s = sqrt(3)*c, d = d_s - t_s); c is too small for the sheath",
                "c");
  }
}

DerivedGeometry derive_geometry(const CableSpec& spec) {
  validate(spec);
  DerivedGeometry g;
  g.conductor_spacing = trefoil_spacing(spec.core_offset);
  g.sheath_mean_diameter = sheath_mean_diameter(spec.sheath_outer_diameter, spec.sheath_thickness);
  g.crossing_pitch = crossing_pitch(spec.phase_lay_length, spec.armor_lay_length);
  g.model_length = model_length(g.crossing_pitch, spec.armor_wire_count);
  g.boundary_rotation = boundary_rotation(g.model_length, spec.phase_lay_length);
  g.lay_factor = lay_factor(spec.core_offset, spec.phase_lay_length);
  return g;
}

const char* to_string(ConductorMaterial m) {
  return m == ConductorMaterial::copper ? "copper" : "aluminum";
}

const char* to_string(SheathMaterial) { return "lead"; }

}  // namespace cableloss
