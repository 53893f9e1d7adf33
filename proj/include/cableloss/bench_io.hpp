#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cableloss/cable_model.hpp"
#include "cableloss/em_pipeline.hpp"
#include "cableloss/iec60287.hpp"

namespace cableloss::bench {

// One cable file: [cable], optional [materials], [operating], [measurements].
struct CableFile {
  CableSpec spec;
  iec::MaterialSet materials;
  iec::OperatingPoint operating;
  std::optional<em::TestMeasurements> measurements;

  bool operator==(const CableFile&) const = default;
};

// `source` names the document in error messages. `default_id` is used when
// the [cable] section has no id key.
CableFile parse_cable_text(std::string_view text, const std::string& source = "<text>",
                           const std::string& default_id = "cable");
CableFile load_cable_file(const std::filesystem::path& path);
std::string write_cable_text(const CableFile& file);

// Bundled cable descriptions (one per published geometry row). Names are
// "30kV", "115kV", ...
std::vector<std::string> template_names();
CableFile load_template(const std::string& name);
std::string template_text(const std::string& name);

// "template:NAME" resolves a bundled template, anything else is a path.
CableFile load_input(const std::string& input);

enum class Method { iec, iec_sb, original, legacy, improved };

const char* to_string(Method m);
std::optional<Method> parse_method(const std::string& name);
std::vector<Method> all_methods();

struct ReportRow {
  std::string cable_id;
  std::string method;
  bool ok = true;
  std::string error;
  std::optional<std::string> sweep_parameter;
  std::optional<double> sweep_value;
  // W/m
  std::optional<double> p_c;
  std::optional<double> p_s;
  std::optional<double> p_a;
  std::optional<double> delta_p_m;
  std::optional<double> delta_p_c_j;
  std::optional<double> delta_p_s_j;
  std::optional<double> delta_p_s_ec;
  std::optional<double> lambda1_prime;
  std::optional<double> lambda1_doubleprime;
  std::optional<double> lambda2;
  std::optional<double> f_c;
  std::optional<double> y_c;
  std::optional<double> y_a;
  // ohm/km
  std::optional<double> r_c_dc;
  std::optional<double> r_s_dc;
  std::optional<double> r_a_dc;
  std::vector<std::string> warnings;

  bool operator==(const ReportRow&) const = default;
};

// Evaluate one cable with one method. Errors are caught and returned as an
// error row.
ReportRow evaluate(const CableFile& file, Method method);

// One row per (input, method) in input order then method order. A failing
// input yields error rows and does not stop the batch.
std::vector<ReportRow> run_batch(const std::vector<std::string>& inputs,
                                 const std::vector<Method>& methods);

enum class SweepParameter { mu_real, phase_lay, armor_lay, armor_wire_diameter, armor_wire_count,
                            ambient_temp, frequency };

const char* to_string(SweepParameter p);
std::optional<SweepParameter> parse_sweep_parameter(const std::string& name);

// Values are in file units (mm for d_a, m for lay lengths, degC, Hz).
struct SweepPlan {
  SweepParameter parameter = SweepParameter::mu_real;
  std::vector<double> values;
  std::string base;  // input as accepted by load_input
  Method method = Method::iec;
};

std::vector<double> linear_range(double start, double stop, int steps);

std::vector<ReportRow> run_sweep(const SweepPlan& plan);

enum class ReportFormat { csv, json };

std::optional<ReportFormat> parse_format(const std::string& name);
std::string format_csv(const std::vector<ReportRow>& rows);
std::string format_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> parse_json_report(std::string_view text);
std::string render_report(const std::vector<ReportRow>& rows, ReportFormat format);
void emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace cableloss::bench
