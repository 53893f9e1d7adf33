#include "cableloss/iec60287.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cableloss::iec {

namespace {

constexpr double pi = std::numbers::pi;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

}  // namespace

double OperatingPoint::omega() const { return 2.0 * pi * frequency; }

void validate(const OperatingPoint& op) {
  if (!(op.frequency > 0.0) || !std::isfinite(op.frequency)) {
    throw Error(ErrorCode::invalid_spec, "frequency must be positive", "frequency");
  }
  if (!std::isfinite(op.ambient_temp)) {
    throw Error(ErrorCode::invalid_spec, "temperature must be finite", "temperature");
  }
  if (!(op.conductor_current >= 0.0) || !std::isfinite(op.conductor_current)) {
    throw Error(ErrorCode::invalid_spec, "current must be >= 0", "current");
  }
}

MaterialSet default_materials(const CableSpec& spec) {
  MaterialSet m;
  m.conductor = spec.conductor_material == ConductorMaterial::copper ? materials::copper
                                                                     : materials::aluminum;
  m.sheath = materials::lead;
  m.armor = materials::steel;
  return m;
}

double dc_resistance_at_temp(double r_dc_20, double alpha, double theta) {
  require(r_dc_20 > 0.0, "DC resistance at 20 degC must be positive");
  return r_dc_20 * (1.0 + alpha * (theta - 20.0));
}

double conductor_dc_resistance_20(const CableSpec& spec, const MaterialSet& m) {
  if (m.conductor_dc_20) return *m.conductor_dc_20;
  const double area = pi * spec.conductor_diameter * spec.conductor_diameter / 4.0;
  return m.conductor.resistivity_20c / area;
}

double sheath_dc_resistance_20(const CableSpec& spec, const MaterialSet& m) {
  if (m.sheath_dc_20) return *m.sheath_dc_20;
  const double d = sheath_mean_diameter(spec.sheath_outer_diameter, spec.sheath_thickness);
  return m.sheath.resistivity_20c / (pi * d * spec.sheath_thickness);
}

double armor_dc_resistance_20(const CableSpec& spec, const MaterialSet& m) {
  if (m.armor_dc_20) return *m.armor_dc_20;
  const double wire_area = pi * spec.armor_wire_diameter * spec.armor_wire_diameter / 4.0;
  const double helix = pi * spec.armor_mean_diameter / spec.armor_lay_length;
  return m.armor.resistivity_20c / (spec.armor_wire_count * wire_area) *
         std::sqrt(1.0 + helix * helix);
}

double skin_effect_factor(double r_dc, double frequency, double k_s) {
  require(r_dc > 0.0, "conductor DC resistance must be positive");
  const double xs2 = 8.0 * pi * frequency / r_dc * 1e-7 * k_s;
  const double xs = std::sqrt(xs2);
  if (xs <= 2.8) return xs2 * xs2 / (192.0 + 0.8 * xs2 * xs2);
  if (xs <= 3.8) return -0.136 - 0.0177 * xs + 0.0563 * xs2;
  return 0.354 * xs - 0.733;
}

double proximity_effect_factor(double r_dc, double frequency, double conductor_diameter,
                               double conductor_spacing, double k_p) {
  require(r_dc > 0.0, "conductor DC resistance must be positive");
  require(conductor_spacing > 0.0, "conductor spacing must be positive");
  const double xp2 = 8.0 * pi * frequency / r_dc * 1e-7 * k_p;
  const double f = xp2 * xp2 / (192.0 + 0.8 * xp2 * xp2);
  const double ratio2 = std::pow(conductor_diameter / conductor_spacing, 2);
  return f * ratio2 * (0.312 * ratio2 + 1.18 / (f + 0.27));
}

double conductor_ac_resistance(double r_dc, double y_s, double y_p) {
  require(r_dc > 0.0, "conductor DC resistance must be positive");
  require(y_s >= 0.0 && y_p >= 0.0, "skin and proximity factors must be >= 0");
  return r_dc * (1.0 + y_s + y_p);
}

double sheath_reactance(double omega, double conductor_spacing, double sheath_mean_diameter) {
  const double ratio = 2.0 * conductor_spacing / sheath_mean_diameter;
  require(ratio > 0.0, "2s/d must be positive");
  return 2.0 * omega * 1e-7 * std::log(ratio);
}

bool reactance_is_physical(double conductor_spacing, double sheath_mean_diameter) {
  return 2.0 * conductor_spacing > sheath_mean_diameter;
}

double lambda1_prime(double r_s, double r_c_ac, double reactance) {
  require(r_s > 0.0 && r_c_ac > 0.0, "resistances must be positive");
  if (reactance == 0.0) return 0.0;
  const double q = r_s / reactance;
  return (r_s / r_c_ac) * 1.5 / (1.0 + q * q);
}

EddyCurrentTerms eddy_current_terms(const EddyCurrentInputs& in) {
  const std::pair<double, const char*> required[] = {
      {in.sheath_resistance, "sheath_resistance"},
      {in.conductor_ac_resistance, "conductor_ac_resistance"},
      {in.omega, "omega"},
      {in.sheath_resistivity, "sheath_resistivity"},
      {in.sheath_thickness, "sheath_thickness"},
      {in.sheath_outer_diameter, "sheath_outer_diameter"},
      {in.sheath_mean_diameter, "sheath_mean_diameter"},
      {in.conductor_spacing, "conductor_spacing"},
  };
  for (const auto& [value, name] : required) {
    if (std::isnan(value)) {
      throw Error(ErrorCode::config,
                  std::string("eddy-current loss factor: missing parameter ") + name, name);
    }
  }
  require(in.sheath_resistance > 0.0 && in.conductor_ac_resistance > 0.0,
          "resistances must be positive");
  require(in.sheath_resistivity > 0.0, "sheath resistivity must be positive");

  // Standard's unit conventions: t_s and D_s in mm, beta1 in 1/m.
  const double ts_mm = in.sheath_thickness * 1e3;
  const double ds_mm = in.sheath_outer_diameter * 1e3;
  const double d_over_2s = in.sheath_mean_diameter / (2.0 * in.conductor_spacing);

  EddyCurrentTerms t;
  t.beta1 = std::sqrt(4.0 * pi * in.omega / (1e7 * in.sheath_resistivity));
  t.g_s = 1.0 + std::pow(ts_mm / ds_mm, 1.74) * (t.beta1 * ds_mm * 1e-3 - 1.6);
  t.m = in.omega / in.sheath_resistance * 1e-7;
  const double m2 = t.m * t.m;
  t.lambda0 = 3.0 * (m2 / (1.0 + m2)) * d_over_2s * d_over_2s;
  t.delta1 = (1.14 * std::pow(t.m, 2.45) + 0.33) * std::pow(d_over_2s, 0.92 * t.m + 1.66);
  t.delta2 = 0.0;
  const double thick = t.beta1 * ts_mm;
  t.lambda1_doubleprime =
      (in.sheath_resistance / in.conductor_ac_resistance) *
      (t.g_s * t.lambda0 * (1.0 + t.delta1 + t.delta2) + thick * thick * thick * thick / 12e12);
  return t;
}

double lambda1_doubleprime(const EddyCurrentInputs& in) {
  return eddy_current_terms(in).lambda1_doubleprime;
}

double lambda2(double r_a, double r_c_ac, double r_s, double core_offset,
               double armor_mean_diameter, double lambda1_prime, double omega) {
  require(r_a > 0.0 && r_c_ac > 0.0 && r_s > 0.0, "resistances must be positive");
  require(armor_mean_diameter > 0.0 && omega > 0.0, "D_a and omega must be positive");
  const double ring = 2.0 * core_offset / armor_mean_diameter;
  const double shielding = 1.0 - (r_c_ac / r_s) * lambda1_prime;
  const double q = 2.77 * r_a * 1e6 / omega;
  return 1.23 * (r_a / r_c_ac) * ring * ring * shielding / (q * q + 1.0);
}

ResistanceSet cable_resistances(const CableSpec& spec, const MaterialSet& m,
                                const OperatingPoint& op) {
  const double theta = op.ambient_temp;
  ResistanceSet r;
  r.conductor_dc = dc_resistance_at_temp(conductor_dc_resistance_20(spec, m),
                                         m.conductor.temp_coefficient, theta);
  r.sheath_dc =
      dc_resistance_at_temp(sheath_dc_resistance_20(spec, m), m.sheath.temp_coefficient, theta);
  r.armor_dc =
      dc_resistance_at_temp(armor_dc_resistance_20(spec, m), m.armor.temp_coefficient, theta);
  r.y_s = skin_effect_factor(r.conductor_dc, op.frequency, m.k_s);
  r.y_p = proximity_effect_factor(r.conductor_dc, op.frequency, spec.conductor_diameter,
                                  trefoil_spacing(spec.core_offset), m.k_p);
  r.conductor_ac = conductor_ac_resistance(r.conductor_dc, r.y_s, r.y_p);
  return r;
}

LossBreakdown allocate_iec(const CableSpec& spec, const MaterialSet& m, const OperatingPoint& op,
                           EddyMode mode) {
  const DerivedGeometry g = derive_geometry(spec);
  validate(op);
  const double omega = op.omega();

  LossBreakdown out;
  out.mode = mode;
  out.resistances = cable_resistances(spec, m, op);
  const ResistanceSet& r = out.resistances;

  out.reactance = sheath_reactance(omega, g.conductor_spacing, g.sheath_mean_diameter);
  if (!reactance_is_physical(g.conductor_spacing, g.sheath_mean_diameter)) {
    out.warnings.push_back(make_warning(WarningCode::nonphysical_reactance));
  }
  out.lambda1_prime = lambda1_prime(r.sheath_dc, r.conductor_ac, out.reactance);

  if (mode == EddyMode::included) {
    EddyCurrentInputs in;
    in.sheath_resistance = r.sheath_dc;
    in.conductor_ac_resistance = r.conductor_ac;
    in.omega = omega;
    in.sheath_resistivity = m.sheath.resistivity_20c *
                            (1.0 + m.sheath.temp_coefficient * (op.ambient_temp - 20.0));
    in.sheath_thickness = spec.sheath_thickness;
    in.sheath_outer_diameter = spec.sheath_outer_diameter;
    in.sheath_mean_diameter = g.sheath_mean_diameter;
    in.conductor_spacing = g.conductor_spacing;
    out.lambda1_doubleprime = lambda1_doubleprime(in);
  }

  out.lambda2 = lambda2(r.armor_dc, r.conductor_ac, r.sheath_dc, spec.core_offset,
                        spec.armor_mean_diameter, out.lambda1_prime, omega);
  if (out.lambda2 < 0.0) out.warnings.push_back(make_warning(WarningCode::negative_lambda2));

  const double i = op.conductor_current;
  out.p_c = 3.0 * r.conductor_ac * i * i;
  out.p_s = (out.lambda1_prime + out.lambda1_doubleprime) * out.p_c;
  out.p_a = out.lambda2 * out.p_c;
  return out;
}

}  // namespace cableloss::iec
