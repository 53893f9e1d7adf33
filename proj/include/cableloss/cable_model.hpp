#pragma once

#include <string>

namespace cableloss {

enum class ConductorMaterial { copper, aluminum };
enum class SheathMaterial { lead };

// Geometry and materials of one solidly bonded, three-core, separately
// lead-sheathed, wire-armored cable. All lengths are in metres; the cable
// file reader converts from the customary mm / m units.
struct CableSpec {
  std::string id;
  double voltage_kv = 0.0;
  double rated_current = 0.0;          // A rms
  double conductor_diameter = 0.0;     // d_c
  double sheath_outer_diameter = 0.0;  // d_s
  double sheath_thickness = 0.0;       // t_s
  double core_offset = 0.0;            // c, conductor centre to cable axis
  double armor_wire_diameter = 0.0;    // d_a
  double armor_mean_diameter = 0.0;    // D_a
  int armor_wire_count = 0;            // N
  double phase_lay_length = 0.0;       // L_c
  double armor_lay_length = 0.0;       // L_a
  ConductorMaterial conductor_material = ConductorMaterial::copper;
  SheathMaterial sheath_material = SheathMaterial::lead;
  double armor_mu_real = 1.0;  // mu'
  double armor_mu_imag = 0.0;  // mu'', carried for completeness; no formula here uses it
  double cross_section = 0.0;  // m^2, metadata only (0 = not given)

  bool operator==(const CableSpec&) const = default;
};

struct DerivedGeometry {
  double conductor_spacing = 0.0;     // s
  double sheath_mean_diameter = 0.0;  // d
  double crossing_pitch = 0.0;        // CP
  double model_length = 0.0;          // CP / N
  double boundary_rotation = 0.0;     // rad
  double lay_factor = 1.0;

  bool operator==(const DerivedGeometry&) const = default;
};

// Axial distance over which an armor wire completes one revolution around a
// phase, for contralay cables.
double crossing_pitch(double phase_lay_length, double armor_lay_length);

// Shortest periodic slice length: crossing pitch divided by the wire count.
double model_length(double crossing_pitch, int armor_wire_count);

// Rotation between the two periodic boundaries of a slice of given length.
double boundary_rotation(double model_length, double phase_lay_length);

// sqrt(1 + (2 pi c / L_c)^2). Both arguments in metres.
double lay_factor(double core_offset, double phase_lay_length);

// Spacing of conductor axes in a symmetric trefoil: sqrt(3) * c.
double trefoil_spacing(double core_offset);

double sheath_mean_diameter(double sheath_outer_diameter, double sheath_thickness);

// Throws Error(invalid_spec) naming the first offending field.
void validate(const CableSpec& spec);

DerivedGeometry derive_geometry(const CableSpec& spec);

const char* to_string(ConductorMaterial m);
const char* to_string(SheathMaterial m);

}  // namespace cableloss
