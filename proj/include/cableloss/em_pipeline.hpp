#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cableloss/cable_model.hpp"
#include "cableloss/corrections.hpp"
#include "cableloss/error.hpp"
#include "cableloss/iec60287.hpp"

namespace cableloss::em {

// Quantities reported by a paired unarmored (0) / armored (1) test. Powers in
// W/m, resistances in ohm/m at the test temperature.
struct TestMeasurements {
  double p_m0 = 0.0;
  double p_m1 = 0.0;
  double i_c0 = 0.0;
  double i_c1 = 0.0;
  double i_s0 = 0.0;
  double i_s1 = 0.0;
  double r_c_dc = 0.0;
  double r_s_dc = 0.0;
  double r_a_dc = 0.0;
  double theta_test = 20.0;
  double y_s = 0.0;
  double y_p = 0.0;
  // Per-part temperatures for tests where the cable heats between runs.
  // Stored for reporting; no method uses them.
  std::optional<double> theta_conductor;
  std::optional<double> theta_sheath;
  std::optional<double> theta_armor;

  double delta_p_m() const { return p_m1 - p_m0; }
  bool operator==(const TestMeasurements&) const = default;
};

void validate(const TestMeasurements& m);

enum class Method { original, legacy, improved };

const char* to_string(Method m);
std::optional<Method> parse_method(const std::string& name);

struct AllocationResult {
  Method method = Method::original;
  double p_a = 0.0;
  double delta_p_m = 0.0;
  double delta_p_c_j = 0.0;
  double delta_p_s_j = 0.0;
  double delta_p_s_ec = 0.0;
  std::optional<corrections::CorrectionFactors> corrections;  // improved only
  std::optional<double> lambda1_doubleprime;                  // legacy only
  Warnings warnings;
};

struct Options {
  // Allowed relative mismatch between the two injected conductor currents.
  double current_tolerance = 1e-3;
};

AllocationResult original_em(const TestMeasurements& m, const Options& opts = {});

// lambda1'' is the standard's eddy-current factor at test conditions.
AllocationResult legacy_em(const TestMeasurements& m, double lambda1_doubleprime,
                           const Options& opts = {});

AllocationResult improved_em(const TestMeasurements& m,
                             const corrections::CorrectionFactors& factors,
                             const Options& opts = {});
AllocationResult improved_em(const TestMeasurements& m, const DerivedGeometry& geom,
                             const CableSpec& spec, const Options& opts = {});

// lambda1'' for the legacy method, using the measured sheath resistance and
// R_c = r_c_dc (1 + y_s + y_p).
double test_lambda1_doubleprime(const TestMeasurements& m, const CableSpec& spec,
                                const DerivedGeometry& geom, const iec::MaterialSet& materials,
                                double frequency);

// Signed (estimate - reference) / reference.
double relative_error(double estimate, double reference);

struct MethodComparison {
  double reference_p_a = 0.0;
  std::vector<AllocationResult> results;  // original, legacy, improved
  std::vector<double> relative_errors;
};

MethodComparison compare_methods(const TestMeasurements& m, const DerivedGeometry& geom,
                                 const CableSpec& spec, const iec::MaterialSet& materials,
                                 double frequency, double reference_p_a,
                                 const Options& opts = {});

}  // namespace cableloss::em
