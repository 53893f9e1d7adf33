#include "cableloss/em_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cableloss::em {

namespace {

void check_equal_currents(const TestMeasurements& m, const Options& opts) {
  const double scale = std::max(std::abs(m.i_c0), std::abs(m.i_c1));
  if (std::abs(m.i_c0 - m.i_c1) > opts.current_tolerance * scale) {
    throw Error(ErrorCode::method_assumption,
                "difference method requires equal conductor currents in both tests (i_c0 = " +
                    std::to_string(m.i_c0) + ", i_c1 = " + std::to_string(m.i_c1) + ")",
                "i_c1");
  }
}

AllocationResult finish(Method method, const TestMeasurements& m, double dpc, double dps,
                        double dpsec) {
  AllocationResult r;
  r.method = method;
  r.delta_p_m = m.delta_p_m();
  r.delta_p_c_j = dpc;
  r.delta_p_s_j = dps;
  r.delta_p_s_ec = dpsec;
  r.p_a = r.delta_p_m - r.delta_p_c_j - r.delta_p_s_j - r.delta_p_s_ec;
  if (m.p_m1 < m.p_m0) {
    r.warnings.push_back(make_warning(WarningCode::armored_power_below_unarmored));
  }
  if (r.p_a < 0.0) r.warnings.push_back(make_warning(WarningCode::negative_armor_loss));
  return r;
}

}  // namespace

void validate(const TestMeasurements& m) {
  auto positive = [](double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::invalid_spec, std::string(field) + " must be positive", field);
    }
  };
  auto non_negative = [](double v, const char* field) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::invalid_spec, std::string(field) + " must be >= 0", field);
    }
  };
  positive(m.r_c_dc, "r_c_dc");
  positive(m.r_s_dc, "r_s_dc");
  positive(m.r_a_dc, "r_a_dc");
  non_negative(m.i_c0, "i_c0");
  non_negative(m.i_c1, "i_c1");
  non_negative(m.i_s0, "i_s0");
  non_negative(m.i_s1, "i_s1");
  non_negative(m.y_s, "y_s");
  non_negative(m.y_p, "y_p");
  if (!std::isfinite(m.p_m0) || !std::isfinite(m.p_m1)) {
    throw Error(ErrorCode::invalid_spec, "measured powers must be finite", "p_m1");
  }
}

const char* to_string(Method m) {
  switch (m) {
    case Method::original: return "original";
    case Method::legacy: return "legacy";
    case Method::improved: return "improved";
  }
  return "unknown";
}

std::optional<Method> parse_method(const std::string& name) {
  if (name == "original") return Method::original;
  if (name == "legacy") return Method::legacy;
  if (name == "improved") return Method::improved;
  return std::nullopt;
}

AllocationResult original_em(const TestMeasurements& m, const Options& opts) {
  check_equal_currents(m, opts);
  const double dps = 3.0 * m.r_s_dc * (m.i_s1 * m.i_s1 - m.i_s0 * m.i_s0);
  return finish(Method::original, m, 0.0, dps, 0.0);
}

AllocationResult legacy_em(const TestMeasurements& m, double lambda1_doubleprime,
                           const Options& opts) {
  check_equal_currents(m, opts);
  // P_c1 ~ 1.02 P_c0 and P_s1^ec ~ 1.35 P_s0^ec.
  const double r_c = m.r_c_dc * (1.0 + m.y_s + m.y_p);
  const double conductor_base = 3.0 * r_c * m.i_c0 * m.i_c0;
  const double dpc = conductor_base * 0.02;
  const double dpsec = conductor_base * 0.35 * lambda1_doubleprime;
  const double dps = 3.0 * m.r_s_dc * (m.i_s1 * m.i_s1 - m.i_s0 * m.i_s0);
  auto r = finish(Method::legacy, m, dpc, dps, dpsec);
  r.lambda1_doubleprime = lambda1_doubleprime;
  return r;
}

AllocationResult improved_em(const TestMeasurements& m,
                             const corrections::CorrectionFactors& factors, const Options& opts) {
  check_equal_currents(m, opts);
  const double i_c = m.i_c0;
  const double dpc = 3.0 * m.r_c_dc * m.y_p * i_c * i_c * (factors.f_c - 1.0);
  const double dps = 3.0 * m.r_s_dc * (1.0 + factors.y_c) *
                     ((1.0 + factors.y_a) * m.i_s1 * m.i_s1 - m.i_s0 * m.i_s0);
  auto r = finish(Method::improved, m, dpc, dps, 0.0);
  r.corrections = factors;
  r.warnings.insert(r.warnings.begin(), factors.flags.begin(), factors.flags.end());
  return r;
}

AllocationResult improved_em(const TestMeasurements& m, const DerivedGeometry& geom,
                             const CableSpec& spec, const Options& opts) {
  return improved_em(m, corrections::correction_factors(spec, geom), opts);
}

double test_lambda1_doubleprime(const TestMeasurements& m, const CableSpec& spec,
                                const DerivedGeometry& geom, const iec::MaterialSet& materials,
                                double frequency) {
  iec::EddyCurrentInputs in;
  in.sheath_resistance = m.r_s_dc;
  in.conductor_ac_resistance = iec::conductor_ac_resistance(m.r_c_dc, m.y_s, m.y_p);
  in.omega = 2.0 * std::numbers::pi * frequency;
  in.sheath_resistivity = materials.sheath.resistivity_20c *
                          (1.0 + materials.sheath.temp_coefficient * (m.theta_test - 20.0));
  in.sheath_thickness = spec.sheath_thickness;
  in.sheath_outer_diameter = spec.sheath_outer_diameter;
  in.sheath_mean_diameter = geom.sheath_mean_diameter;
  in.conductor_spacing = geom.conductor_spacing;
  return iec::lambda1_doubleprime(in);
}

double relative_error(double estimate, double reference) {
  if (!(reference > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "reference armor loss must be positive",
                "reference_p_a");
  }
  return (estimate - reference) / reference;
}

MethodComparison compare_methods(const TestMeasurements& m, const DerivedGeometry& geom,
                                 const CableSpec& spec, const iec::MaterialSet& materials,
                                 double frequency, double reference_p_a, const Options& opts) {
  if (!(reference_p_a > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "reference armor loss must be positive",
                "reference_p_a");
  }
  MethodComparison c;
  c.reference_p_a = reference_p_a;
  c.results.push_back(original_em(m, opts));
  c.results.push_back(
      legacy_em(m, test_lambda1_doubleprime(m, spec, geom, materials, frequency), opts));
  c.results.push_back(improved_em(m, geom, spec, opts));
  for (const auto& r : c.results) c.relative_errors.push_back(relative_error(r.p_a, reference_p_a));
  return c;
}

}  // namespace cableloss::em
