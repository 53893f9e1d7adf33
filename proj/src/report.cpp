#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cableloss/bench_io.hpp"
#include "number_format.hpp"

namespace cableloss::bench {

namespace {

constexpr double per_km = 1e3;

void add_warnings(ReportRow& row, const Warnings& ws) {
  for (const auto& w : ws) row.warnings.push_back(w.message);
}

std::string stem_of(const std::string& input) {
  constexpr std::string_view prefix = "template:";
  if (input.rfind(prefix, 0) == 0) return input.substr(prefix.size());
  return std::filesystem::path(input).stem().string();
}

// Column order is part of the report format.
using Optional = std::optional<double> ReportRow::*;
struct NumericColumn {
  const char* name;
  Optional member;
};

constexpr NumericColumn kNumeric[] = {
    {"sweep_value", &ReportRow::sweep_value},
    {"p_c_w_per_m", &ReportRow::p_c},
    {"p_s_w_per_m", &ReportRow::p_s},
    {"p_a_w_per_m", &ReportRow::p_a},
    {"delta_p_m_w_per_m", &ReportRow::delta_p_m},
    {"delta_p_c_j_w_per_m", &ReportRow::delta_p_c_j},
    {"delta_p_s_j_w_per_m", &ReportRow::delta_p_s_j},
    {"delta_p_s_ec_w_per_m", &ReportRow::delta_p_s_ec},
    {"lambda1_prime", &ReportRow::lambda1_prime},
    {"lambda1_doubleprime", &ReportRow::lambda1_doubleprime},
    {"lambda2", &ReportRow::lambda2},
    {"f_c", &ReportRow::f_c},
    {"y_c", &ReportRow::y_c},
    {"y_a", &ReportRow::y_a},
    {"r_c_dc_ohm_per_km", &ReportRow::r_c_dc},
    {"r_s_dc_ohm_per_km", &ReportRow::r_s_dc},
    {"r_a_dc_ohm_per_km", &ReportRow::r_a_dc},
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_warnings(const std::vector<std::string>& ws) {
  std::string out;
  for (const auto& w : ws) out += (out.empty() ? "" : "; ") + w;
  return out;
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::iec: return "iec";
    case Method::iec_sb: return "iec-sb";
    case Method::original: return "original";
    case Method::legacy: return "legacy";
    case Method::improved: return "improved";
  }
  return "unknown";
}

std::optional<Method> parse_method(const std::string& name) {
  for (Method m : all_methods()) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

std::vector<Method> all_methods() {
  return {Method::iec, Method::iec_sb, Method::original, Method::legacy, Method::improved};
}

ReportRow evaluate(const CableFile& file, Method method) {
  ReportRow row;
  row.cable_id = file.spec.id;
  row.method = to_string(method);
  try {
    const DerivedGeometry geom = derive_geometry(file.spec);
    iec::validate(file.operating);
    const auto cf = corrections::correction_factors(file.spec, geom);
    row.f_c = cf.f_c;
    row.y_c = cf.y_c;
    row.y_a = cf.y_a;

    if (method == Method::iec || method == Method::iec_sb) {
      add_warnings(row, cf.flags);
      const auto mode = method == Method::iec ? iec::EddyMode::included : iec::EddyMode::neglected;
      const auto lb = iec::allocate_iec(file.spec, file.materials, file.operating, mode);
      row.p_c = lb.p_c;
      row.p_s = lb.p_s;
      row.p_a = lb.p_a;
      row.lambda1_prime = lb.lambda1_prime;
      row.lambda1_doubleprime = lb.lambda1_doubleprime;
      row.lambda2 = lb.lambda2;
      row.r_c_dc = lb.resistances.conductor_dc * per_km;
      row.r_s_dc = lb.resistances.sheath_dc * per_km;
      row.r_a_dc = lb.resistances.armor_dc * per_km;
      add_warnings(row, lb.warnings);
      return row;
    }

    if (!file.measurements) {
      throw Error(ErrorCode::missing_data,
                  std::string("method '") + to_string(method) +
                      "' needs a [measurements] section, which this cable file does not have",
                  "measurements");
    }
    const auto& m = *file.measurements;
    row.r_c_dc = m.r_c_dc * per_km;
    row.r_s_dc = m.r_s_dc * per_km;
    row.r_a_dc = m.r_a_dc * per_km;

    em::AllocationResult res;
    if (method == Method::original) {
      add_warnings(row, cf.flags);
      res = em::original_em(m);
    } else if (method == Method::legacy) {
      add_warnings(row, cf.flags);
      const double l1pp = em::test_lambda1_doubleprime(m, file.spec, geom, file.materials,
                                                       file.operating.frequency);
      res = em::legacy_em(m, l1pp);
      row.lambda1_doubleprime = l1pp;
    } else {
      res = em::improved_em(m, cf);  // carries the correction flags itself
    }
    row.p_a = res.p_a;
    row.delta_p_m = res.delta_p_m;
    row.delta_p_c_j = res.delta_p_c_j;
    row.delta_p_s_j = res.delta_p_s_j;
    row.delta_p_s_ec = res.delta_p_s_ec;
    add_warnings(row, res.warnings);
  } catch (const Error& e) {
    ReportRow failed;
    failed.cable_id = row.cable_id;
    failed.method = row.method;
    failed.sweep_parameter = row.sweep_parameter;
    failed.sweep_value = row.sweep_value;
    failed.ok = false;
    failed.error = std::string(to_string(e.code())) + ": " + e.what();
    return failed;
  }
  return row;
}

std::vector<ReportRow> run_batch(const std::vector<std::string>& inputs,
                                 const std::vector<Method>& methods) {
  if (inputs.empty()) throw Error(ErrorCode::invalid_argument, "batch needs at least one input");
  if (methods.empty()) throw Error(ErrorCode::invalid_argument, "batch needs at least one method");
  std::vector<ReportRow> rows;
  rows.reserve(inputs.size() * methods.size());
  for (const auto& input : inputs) {
    std::optional<CableFile> file;
    std::string load_error;
    try {
      file = load_input(input);
    } catch (const Error& e) {
      load_error = std::string(to_string(e.code())) + ": " + e.what();
    }
    for (Method m : methods) {
      if (file) {
        rows.push_back(evaluate(*file, m));
      } else {
        ReportRow r;
        r.cable_id = stem_of(input);
        r.method = to_string(m);
        r.ok = false;
        r.error = load_error;
        rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

const char* to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::mu_real: return "mu_real";
    case SweepParameter::phase_lay: return "L_c";
    case SweepParameter::armor_lay: return "L_a";
    case SweepParameter::armor_wire_diameter: return "d_a";
    case SweepParameter::armor_wire_count: return "N";
    case SweepParameter::ambient_temp: return "temperature";
    case SweepParameter::frequency: return "frequency";
  }
  return "unknown";
}

std::optional<SweepParameter> parse_sweep_parameter(const std::string& name) {
  for (auto p : {SweepParameter::mu_real, SweepParameter::phase_lay, SweepParameter::armor_lay,
                 SweepParameter::armor_wire_diameter, SweepParameter::armor_wire_count,
                 SweepParameter::ambient_temp, SweepParameter::frequency}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

std::vector<double> linear_range(double start, double stop, int steps) {
  if (steps < 1) throw Error(ErrorCode::invalid_argument, "sweep needs steps >= 1", "steps");
  if (steps == 1) return {start};
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] = start + (stop - start) * i / (steps - 1);
  }
  return out;
}

std::vector<ReportRow> run_sweep(const SweepPlan& plan) {
  if (plan.values.empty()) {
    throw Error(ErrorCode::invalid_argument, "sweep plan has no values", "values");
  }
  const CableFile base = load_input(plan.base);
  std::vector<ReportRow> rows;
  rows.reserve(plan.values.size());
  for (double v : plan.values) {
    CableFile point = base;
    ReportRow row;
    bool applied = true;
    switch (plan.parameter) {
      case SweepParameter::mu_real: point.spec.armor_mu_real = v; break;
      case SweepParameter::phase_lay: point.spec.phase_lay_length = v; break;
      case SweepParameter::armor_lay: point.spec.armor_lay_length = v; break;
      case SweepParameter::armor_wire_diameter: point.spec.armor_wire_diameter = v / 1e3; break;
      case SweepParameter::armor_wire_count:
        if (v != std::floor(v) || v < 1.0 || v > 1e9) {
          applied = false;
        } else {
          point.spec.armor_wire_count = static_cast<int>(v);
        }
        break;
      case SweepParameter::ambient_temp: point.operating.ambient_temp = v; break;
      case SweepParameter::frequency: point.operating.frequency = v; break;
    }
    if (applied) {
      row = evaluate(point, plan.method);
    } else {
      row.cable_id = base.spec.id;
      row.method = to_string(plan.method);
      row.ok = false;
      row.error = "invalid-spec: N must be an integer >= 1, got " + detail::format_number(v);
    }
    row.sweep_parameter = to_string(plan.parameter);
    row.sweep_value = v;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<ReportFormat> parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  return std::nullopt;
}

std::string format_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream o;
  o << "cable_id,method,status,error,sweep_parameter";
  for (const auto& c : kNumeric) o << ',' << c.name;
  o << ",warnings\n";
  for (const auto& r : rows) {
    o << csv_field(r.cable_id) << ',' << csv_field(r.method) << ',' << (r.ok ? "ok" : "error")
      << ',' << csv_field(r.error) << ',' << csv_field(r.sweep_parameter.value_or(""));
    for (const auto& c : kNumeric) {
      o << ',';
      if (const auto& v = r.*(c.member)) o << detail::format_number(*v);
    }
    o << ',' << csv_field(join_warnings(r.warnings)) << '\n';
  }
  return o.str();
}

std::string format_json(const std::vector<ReportRow>& rows) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["cable_id"] = r.cable_id;
    j["method"] = r.method;
    j["status"] = r.ok ? "ok" : "error";
    j["error"] = r.error;
    j["sweep_parameter"] = r.sweep_parameter ? nlohmann::ordered_json(*r.sweep_parameter) : nlohmann::ordered_json(nullptr);
    for (const auto& c : kNumeric) {
      const auto& v = r.*(c.member);
      j[c.name] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    }
    j["warnings"] = r.warnings;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::vector<ReportRow> parse_json_report(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("report JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::parse, "report JSON must be an array");
  std::vector<ReportRow> rows;
  try {
    for (const auto& j : doc) {
      ReportRow r;
      r.cable_id = j.at("cable_id").get<std::string>();
      r.method = j.at("method").get<std::string>();
      r.ok = j.at("status").get<std::string>() == "ok";
      r.error = j.at("error").get<std::string>();
      if (!j.at("sweep_parameter").is_null()) {
        r.sweep_parameter = j.at("sweep_parameter").get<std::string>();
      }
      for (const auto& c : kNumeric) {
        const auto& v = j.at(c.name);
        if (!v.is_null()) r.*(c.member) = v.get<double>();
      }
      r.warnings = j.at("warnings").get<std::vector<std::string>>();
      rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("report JSON: ") + e.what());
  }
  return rows;
}

std::string render_report(const std::vector<ReportRow>& rows, ReportFormat format) {
  if (rows.empty()) throw Error(ErrorCode::invalid_argument, "report has no rows");
  return format == ReportFormat::csv ? format_csv(rows) : format_json(rows);
}

void emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                 const std::filesystem::path& path) {
  const std::string text = render_report(rows, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot open '" + path.string() + "' for writing", path.string());
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::io, "write failed for '" + path.string() + "'", path.string());
}

}  // namespace cableloss::bench
