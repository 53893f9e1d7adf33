// cableloss command line front end. Talks to the library only through the C API.
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cableloss/cableloss.h"

namespace {

struct Failure {
  cl_status status;
  std::string message;
};

void check(cl_status s) {
  if (s != CL_OK) throw Failure{s, cl_last_error()};
}

struct CableDeleter {
  void operator()(cl_cable* c) const { cl_cable_free(c); }
};
struct ReportDeleter {
  void operator()(cl_report* r) const { cl_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { cl_string_free(s); }
};
using CablePtr = std::unique_ptr<cl_cable, CableDeleter>;
using ReportPtr = std::unique_ptr<cl_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

CablePtr open_cable(const std::string& input) {
  cl_cable* raw = nullptr;
  const std::string prefix = "template:";
  if (input.rfind(prefix, 0) == 0) {
    check(cl_cable_from_template(input.substr(prefix.size()).c_str(), &raw));
  } else {
    check(cl_cable_load(input.c_str(), &raw));
  }
  return CablePtr(raw);
}

std::string shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

using Cell = std::variant<std::string, double, unsigned>;

// Small column table for the per-command outputs; batch and sweep use the
// library's own report renderer.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string warnings_text(unsigned bits) {
  std::string out;
  for (unsigned b = 1; b != 0 && b <= bits; b <<= 1) {
    if (!(bits & b)) continue;
    if (const char* msg = cl_warning_message(b)) {
      if (!out.empty()) out += "; ";
      out += msg;
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  if (auto* s = std::get_if<std::string>(&c)) return *s;
  if (auto* d = std::get_if<double>(&c)) return shortest(*d);
  return warnings_text(std::get<unsigned>(c));
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
    os << '\n';
  }
  return os.str();
}

std::string render_json(const Table& t) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (size_t i = 0; i < row.size(); ++i) {
      const auto& c = row[i];
      if (auto* s = std::get_if<std::string>(&c)) {
        obj[t.columns[i]] = *s;
      } else if (auto* d = std::get_if<double>(&c)) {
        obj[t.columns[i]] = *d;
      } else {
        auto list = nlohmann::ordered_json::array();
        const unsigned bits = std::get<unsigned>(c);
        for (unsigned b = 1; b != 0 && b <= bits; b <<= 1) {
          if ((bits & b) && cl_warning_message(b)) list.push_back(cl_warning_message(b));
        }
        obj[t.columns[i]] = list;
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

struct OutputOpts {
  std::string format = "csv";
  std::string out;
};

void write_text(const std::string& text, const OutputOpts& o) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Failure{CL_ERR_IO, "failed writing to stdout"};
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Failure{CL_ERR_IO, "cannot open '" + o.out + "' for writing"};
  f << text;
  f.close();
  if (!f) throw Failure{CL_ERR_IO, "failed writing '" + o.out + "'"};
}

void emit(const Table& t, const OutputOpts& o) {
  write_text(o.format == "json" ? render_json(t) : render_csv(t), o);
}

void emit(const cl_report* r, const OutputOpts& o) {
  if (o.out.empty()) {
    char* raw = nullptr;
    check(cl_report_render(r, o.format.c_str(), &raw));
    StringPtr text(raw);
    write_text(text.get(), o);
  } else {
    check(cl_report_write(r, o.format.c_str(), o.out.c_str()));
  }
}

void add_output_flags(CLI::App* cmd, OutputOpts& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Write output to this path instead of stdout");
}

struct OperatingOverride {
  std::optional<double> frequency, temperature, current;
};

void add_operating_flags(CLI::App* cmd, OperatingOverride& op) {
  cmd->add_option("--frequency", op.frequency, "Frequency, Hz");
  cmd->add_option("--temperature", op.temperature, "Ambient temperature, degC");
  cmd->add_option("--current", op.current, "Conductor current, A rms");
}

// The C API only sets all three together, so read the current values back
// from the rendered file when overriding a subset.
void apply_operating(cl_cable* cable, const OperatingOverride& op) {
  if (!op.frequency && !op.temperature && !op.current) return;
  char* raw = nullptr;
  check(cl_cable_render(cable, &raw));
  StringPtr text(raw);
  double f = 50.0, t = 20.0, i = 0.0;
  std::istringstream in(text.get());
  std::string line;
  bool in_operating = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '[') {
      in_operating = line == "[operating]";
      continue;
    }
    if (!in_operating) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    key.erase(key.find_last_not_of(" \t") + 1);
    std::istringstream val(line.substr(eq + 1));
    double v = 0.0;
    val >> v;
    if (key == "frequency") f = v;
    else if (key == "temperature") t = v;
    else if (key == "current") i = v;
  }
  check(cl_cable_set_operating(cable, op.frequency.value_or(f), op.temperature.value_or(t),
                               op.current.value_or(i)));
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const char* b = item.data();
    const char* e = b + item.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) {
      throw Failure{CL_ERR_INVALID_ARGUMENT, "bad number '" + item + "' in --values"};
    }
    out.push_back(v);
  }
  if (out.empty()) throw Failure{CL_ERR_INVALID_ARGUMENT, "--values is empty"};
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Loss allocation for three-core armored power cables"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cl_version());

  std::string input;
  OutputOpts out;
  OperatingOverride op;

  auto* info = app.add_subcommand("info", "Derived geometry of a cable");
  info->add_option("input", input, "Cable file or template:NAME")->required();
  add_output_flags(info, out);

  std::string eddy = "on";
  auto* iec = app.add_subcommand("iec", "Standard loss allocation");
  iec->add_option("input", input, "Cable file or template:NAME")->required();
  iec->add_option("--lambda1dp", eddy, "Include the sheath eddy-current factor")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  add_operating_flags(iec, op);
  add_output_flags(iec, out);

  auto* corrected = app.add_subcommand("corrected", "Correction factors and corrected resistances");
  corrected->add_option("input", input, "Cable file or template:NAME")->required();
  add_operating_flags(corrected, op);
  add_output_flags(corrected, out);

  std::string method;
  std::optional<double> reference;
  auto* em = app.add_subcommand("em-allocate", "Loss allocation from test measurements");
  em->add_option("input", input, "Cable file with a [measurements] section")->required();
  em->add_option("--method", method, "Allocation method")
      ->required()
      ->check(CLI::IsMember({"original", "legacy", "improved"}));
  em->add_option("--reference", reference, "Reference armor loss, W/m, for the relative error");
  add_output_flags(em, out);

  double lo = 0.05, hi = 5.0;
  size_t points = 20;
  auto* oracle = app.add_subcommand("oracle", "Filament circuit solve against the standard factor");
  oracle->add_option("input", input, "Cable file or template:NAME")->required();
  oracle->add_option("--min", lo, "Smallest R_s/X")->capture_default_str();
  oracle->add_option("--max", hi, "Largest R_s/X")->capture_default_str();
  oracle->add_option("--points", points, "Number of log-spaced points")->capture_default_str();
  add_operating_flags(oracle, op);
  add_output_flags(oracle, out);

  std::string param, values, sweep_method = "iec";
  std::optional<double> start, stop;
  int steps = 0;
  auto* sweep = app.add_subcommand("sweep", "Vary one parameter over a range or list");
  sweep->add_option("input", input, "Base cable file or template:NAME")->required();
  sweep->add_option("--param", param, "mu_real, L_c, L_a, d_a, N, temperature or frequency")
      ->required();
  auto* vals = sweep->add_option("--values", values, "Comma-separated values");
  auto* st = sweep->add_option("--start", start, "First value");
  sweep->add_option("--stop", stop, "Last value");
  sweep->add_option("--steps", steps, "Number of points from start to stop");
  vals->excludes(st);
  sweep->add_option("--method", sweep_method, "iec, iec-sb, original, legacy or improved")
      ->capture_default_str();
  add_output_flags(sweep, out);

  std::vector<std::string> inputs;
  std::string methods = "iec,iec-sb,original,legacy,improved";
  auto* batch = app.add_subcommand("batch", "Evaluate several cables with several methods");
  batch->add_option("inputs", inputs, "Cable files or template:NAME; 'templates' for all bundled")
      ->required();
  batch->add_option("--methods", methods, "Comma-separated methods")->capture_default_str();
  add_output_flags(batch, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 2;
  }

  if (*info) {
    auto cable = open_cable(input);
    cl_geometry g;
    check(cl_cable_geometry(cable.get(), &g));
    emit(Table{{"s_mm", "d_mm", "crossing_pitch_m", "model_length_m", "boundary_rotation_rad",
                "lay_factor"},
               {{g.conductor_spacing_mm, g.sheath_mean_diameter_mm, g.crossing_pitch_m,
                 g.model_length_m, g.boundary_rotation_rad, g.lay_factor}}},
         out);
  } else if (*iec) {
    auto cable = open_cable(input);
    apply_operating(cable.get(), op);
    cl_iec_result r;
    check(cl_iec_allocate(cable.get(), eddy == "on", &r));
    emit(Table{{"p_c_w_per_m", "p_s_w_per_m", "p_a_w_per_m", "lambda1_prime",
                "lambda1_doubleprime", "lambda2", "x_ohm_per_km", "r_c_dc_ohm_per_km",
                "r_c_ac_ohm_per_km", "r_s_dc_ohm_per_km", "r_a_dc_ohm_per_km", "y_s", "y_p",
                "warnings"},
               {{r.p_c, r.p_s, r.p_a, r.lambda1_prime, r.lambda1_doubleprime, r.lambda2,
                 r.reactance_ohm_per_km, r.r_c_dc, r.r_c_ac, r.r_s_dc, r.r_a_dc, r.y_s, r.y_p,
                 r.warnings}}},
         out);
  } else if (*corrected) {
    auto cable = open_cable(input);
    apply_operating(cable.get(), op);
    cl_corrections c;
    check(cl_cable_corrections(cable.get(), &c));
    emit(Table{{"f_c", "y_c", "y_a", "r_c_ac_ohm_per_km", "r_c_corrected_ohm_per_km",
                "r_s_dc_ohm_per_km", "r_s_eq_unarmored_ohm_per_km", "r_s_eq_armored_ohm_per_km",
                "warnings"},
               {{c.f_c, c.y_c, c.y_a, c.r_c_ac, c.r_c_corrected, c.r_s_dc, c.r_s_eq_unarmored,
                 c.r_s_eq_armored, c.warnings}}},
         out);
  } else if (*em) {
    auto cable = open_cable(input);
    const cl_em_method m = method == "original" ? CL_METHOD_ORIGINAL
                           : method == "legacy" ? CL_METHOD_LEGACY
                                                : CL_METHOD_IMPROVED;
    cl_em_result r;
    check(cl_em_allocate(cable.get(), m, &r));
    Table t{{"method", "p_a_w_per_m", "delta_p_m_w_per_m", "delta_p_c_j_w_per_m",
             "delta_p_s_j_w_per_m", "delta_p_s_ec_w_per_m", "f_c", "y_c", "y_a",
             "lambda1_doubleprime"},
            {{method, r.p_a, r.delta_p_m, r.delta_p_c_j, r.delta_p_s_j, r.delta_p_s_ec, r.f_c,
              r.y_c, r.y_a, r.lambda1_doubleprime}}};
    if (reference) {
      double err = 0.0;
      check(cl_relative_error(r.p_a, *reference, &err));
      t.columns.push_back("relative_error");
      t.rows[0].push_back(err);
    }
    t.columns.push_back("warnings");
    t.rows[0].push_back(r.warnings);
    emit(t, out);
  } else if (*oracle) {
    auto cable = open_cable(input);
    apply_operating(cable.get(), op);
    std::vector<cl_oracle_point> pts(points);
    check(cl_oracle_sweep(cable.get(), lo, hi, points, pts.data()));
    Table t{{"rs_over_x", "lambda_oracle", "lambda_standard", "ratio"}, {}};
    for (const auto& p : pts) t.rows.push_back({p.rs_over_x, p.lambda_oracle, p.lambda_standard, p.ratio});
    emit(t, out);
  } else if (*sweep) {
    std::vector<double> list;
    if (!values.empty()) {
      list = parse_list(values);
    } else {
      if (!start || !stop || steps < 1) {
        throw Failure{CL_ERR_INVALID_ARGUMENT, "give --values, or --start, --stop and --steps >= 1"};
      }
      for (int k = 0; k < steps; ++k) {
        list.push_back(steps == 1 ? *start : *start + (*stop - *start) * k / (steps - 1));
      }
    }
    cl_report* raw = nullptr;
    check(cl_sweep_run(input.c_str(), param.c_str(), list.data(), list.size(),
                       sweep_method.c_str(), &raw));
    ReportPtr report(raw);
    emit(report.get(), out);
  } else if (*batch) {
    std::vector<std::string> expanded;
    for (const auto& in : inputs) {
      if (in == "templates") {
        for (size_t k = 0; k < cl_template_count(); ++k) {
          expanded.push_back(std::string("template:") + cl_template_name(k));
        }
      } else {
        expanded.push_back(in);
      }
    }
    std::vector<const char*> ptrs;
    for (const auto& s : expanded) ptrs.push_back(s.c_str());
    cl_report* raw = nullptr;
    check(cl_batch_run(ptrs.data(), ptrs.size(), methods.c_str(), &raw));
    ReportPtr report(raw);
    emit(report.get(), out);
    const size_t errors = cl_report_error_count(report.get());
    if (errors > 0) {
      std::cerr << "warning[partial]: " << errors << " of " << cl_report_row_count(report.get())
                << " rows failed\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::cerr << "error[" << cl_status_name(f.status) << "]: " << f.message << "\n";
    return 1;
  }
}
