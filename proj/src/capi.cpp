#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "cableloss/bench_io.hpp"
#include "cableloss/cableloss.h"
#include "cableloss/mesh_oracle.hpp"

using namespace cableloss;

struct cl_cable {
  bench::CableFile file;
};

struct cl_report {
  std::vector<bench::ReportRow> rows;
};

namespace {

thread_local std::string g_last_error;

constexpr double per_km = 1e3;

cl_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return CL_ERR_INVALID_ARGUMENT;
    case ErrorCode::invalid_spec: return CL_ERR_INVALID_SPEC;
    case ErrorCode::parse: return CL_ERR_PARSE;
    case ErrorCode::unit: return CL_ERR_UNIT;
    case ErrorCode::config: return CL_ERR_CONFIG;
    case ErrorCode::method_assumption: return CL_ERR_METHOD_ASSUMPTION;
    case ErrorCode::degenerate_input: return CL_ERR_DEGENERATE_INPUT;
    case ErrorCode::missing_data: return CL_ERR_MISSING_DATA;
    case ErrorCode::io: return CL_ERR_IO;
  }
  return CL_ERR_INTERNAL;
}

cl_status fail(cl_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
cl_status guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CL_ERR_INTERNAL, e.what());
  }
}

unsigned warning_bits(const Warnings& ws) {
  unsigned bits = 0;
  for (const auto& w : ws) bits |= 1u << static_cast<unsigned>(w.code);
  return bits;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<bench::Method> parse_methods(const char* list) {
  std::vector<bench::Method> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto m = bench::parse_method(item);
    if (!m) throw Error(ErrorCode::invalid_argument, "unknown method '" + item + "'", "method");
    out.push_back(*m);
  }
  return out;
}

bench::ReportFormat parse_format_or_throw(const char* format) {
  auto f = bench::parse_format(format ? format : "");
  if (!f) throw Error(ErrorCode::invalid_argument, "format must be csv or json", "format");
  return *f;
}

#define CL_REQUIRE(cond, what) \
  if (!(cond)) return fail(CL_ERR_INVALID_ARGUMENT, what)

cl_status wrap_cable(bench::CableFile file, cl_cable** out) {
  *out = new cl_cable{std::move(file)};
  return CL_OK;
}

}  // namespace

extern "C" {

const char* cl_version(void) { return "1.0.0"; }

const char* cl_last_error(void) { return g_last_error.c_str(); }

const char* cl_status_name(cl_status status) {
  switch (status) {
    case CL_OK: return "ok";
    case CL_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case CL_ERR_INVALID_SPEC: return "invalid-spec";
    case CL_ERR_PARSE: return "parse";
    case CL_ERR_UNIT: return "unit";
    case CL_ERR_CONFIG: return "config";
    case CL_ERR_METHOD_ASSUMPTION: return "method-assumption-violated";
    case CL_ERR_DEGENERATE_INPUT: return "degenerate-input";
    case CL_ERR_MISSING_DATA: return "missing-data";
    case CL_ERR_IO: return "io";
    case CL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* cl_warning_message(unsigned bit) {
  static const std::string messages[] = {
      make_warning(WarningCode::nonphysical_reactance).message,
      make_warning(WarningCode::negative_lambda2).message,
      make_warning(WarningCode::fc_below_one).message,
      make_warning(WarningCode::ya_negative).message,
      make_warning(WarningCode::negative_armor_loss).message,
      make_warning(WarningCode::armored_power_below_unarmored).message,
  };
  for (unsigned i = 0; i < std::size(messages); ++i) {
    if (bit == (1u << i)) return messages[i].c_str();
  }
  return nullptr;
}

size_t cl_template_count(void) { return bench::template_names().size(); }

const char* cl_template_name(size_t index) {
  static const std::vector<std::string> names = bench::template_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

cl_status cl_cable_load(const char* path, cl_cable** out) {
  CL_REQUIRE(path && out, "path and out must be non-null");
  return guarded([&] { return wrap_cable(bench::load_cable_file(path), out); });
}

cl_status cl_cable_from_template(const char* name, cl_cable** out) {
  CL_REQUIRE(name && out, "name and out must be non-null");
  return guarded([&] { return wrap_cable(bench::load_template(name), out); });
}

cl_status cl_cable_parse(const char* text, cl_cable** out) {
  CL_REQUIRE(text && out, "text and out must be non-null");
  return guarded([&] { return wrap_cable(bench::parse_cable_text(text), out); });
}

void cl_cable_free(cl_cable* cable) { delete cable; }

cl_status cl_cable_set_operating(cl_cable* cable, double frequency_hz, double temperature_c,
                                 double current_a) {
  CL_REQUIRE(cable, "cable must be non-null");
  return guarded([&] {
    iec::OperatingPoint op{frequency_hz, temperature_c, current_a};
    iec::validate(op);
    cable->file.operating = op;
    return CL_OK;
  });
}

int cl_cable_has_measurements(const cl_cable* cable) {
  return cable && cable->file.measurements ? 1 : 0;
}

cl_status cl_cable_render(const cl_cable* cable, char** out_text) {
  CL_REQUIRE(cable && out_text, "cable and out_text must be non-null");
  return guarded([&] {
    *out_text = copy_string(bench::write_cable_text(cable->file));
    return CL_OK;
  });
}

cl_status cl_cable_geometry(const cl_cable* cable, cl_geometry* out) {
  CL_REQUIRE(cable && out, "cable and out must be non-null");
  return guarded([&] {
    const auto g = derive_geometry(cable->file.spec);
    *out = {g.conductor_spacing * 1e3, g.sheath_mean_diameter * 1e3, g.crossing_pitch,
            g.model_length, g.boundary_rotation, g.lay_factor};
    return CL_OK;
  });
}

cl_status cl_iec_allocate(const cl_cable* cable, int include_eddy, cl_iec_result* out) {
  CL_REQUIRE(cable && out, "cable and out must be non-null");
  return guarded([&] {
    const auto& f = cable->file;
    const auto lb = iec::allocate_iec(
        f.spec, f.materials, f.operating,
        include_eddy ? iec::EddyMode::included : iec::EddyMode::neglected);
    const auto& r = lb.resistances;
    *out = {lb.p_c,
            lb.p_s,
            lb.p_a,
            lb.lambda1_prime,
            lb.lambda1_doubleprime,
            lb.lambda2,
            lb.reactance * per_km,
            r.conductor_dc * per_km,
            r.conductor_ac * per_km,
            r.sheath_dc * per_km,
            r.armor_dc * per_km,
            r.y_s,
            r.y_p,
            warning_bits(lb.warnings)};
    return CL_OK;
  });
}

cl_status cl_cable_corrections(const cl_cable* cable, cl_corrections* out) {
  CL_REQUIRE(cable && out, "cable and out must be non-null");
  return guarded([&] {
    const auto& f = cable->file;
    const auto g = derive_geometry(f.spec);
    const auto cf = corrections::correction_factors(f.spec, g);
    const auto r = iec::cable_resistances(f.spec, f.materials, f.operating);
    using corrections::Armoring;
    *out = {cf.f_c,
            cf.y_c,
            cf.y_a,
            r.conductor_ac * per_km,
            corrections::corrected_conductor_resistance(r.conductor_dc, r.y_s, r.y_p, cf.f_c) *
                per_km,
            r.sheath_dc * per_km,
            corrections::sheath_equivalent_resistance(r.sheath_dc, cf.y_c, cf.y_a,
                                                      Armoring::unarmored) *
                per_km,
            corrections::sheath_equivalent_resistance(r.sheath_dc, cf.y_c, cf.y_a,
                                                      Armoring::armored) *
                per_km,
            warning_bits(cf.flags)};
    return CL_OK;
  });
}

cl_status cl_em_allocate(const cl_cable* cable, cl_em_method method, cl_em_result* out) {
  CL_REQUIRE(cable && out, "cable and out must be non-null");
  CL_REQUIRE(method >= CL_METHOD_ORIGINAL && method <= CL_METHOD_IMPROVED, "unknown method");
  return guarded([&] {
    const auto& f = cable->file;
    if (!f.measurements) {
      throw Error(ErrorCode::missing_data, "cable file has no [measurements] section",
                  "measurements");
    }
    const auto& m = *f.measurements;
    const auto g = derive_geometry(f.spec);
    em::AllocationResult r;
    switch (method) {
      case CL_METHOD_ORIGINAL: r = em::original_em(m); break;
      case CL_METHOD_LEGACY:
        r = em::legacy_em(
            m, em::test_lambda1_doubleprime(m, f.spec, g, f.materials, f.operating.frequency));
        break;
      case CL_METHOD_IMPROVED: r = em::improved_em(m, g, f.spec); break;
    }
    *out = {};
    out->p_a = r.p_a;
    out->delta_p_m = r.delta_p_m;
    out->delta_p_c_j = r.delta_p_c_j;
    out->delta_p_s_j = r.delta_p_s_j;
    out->delta_p_s_ec = r.delta_p_s_ec;
    if (r.corrections) {
      out->f_c = r.corrections->f_c;
      out->y_c = r.corrections->y_c;
      out->y_a = r.corrections->y_a;
    }
    out->lambda1_doubleprime = r.lambda1_doubleprime.value_or(0.0);
    out->warnings = warning_bits(r.warnings);
    return CL_OK;
  });
}

cl_status cl_relative_error(double estimate, double reference, double* out) {
  CL_REQUIRE(out, "out must be non-null");
  return guarded([&] {
    *out = em::relative_error(estimate, reference);
    return CL_OK;
  });
}

cl_status cl_oracle_solve(double r_s_ohm_per_km, double omega, double s_mm, double d_mm,
                          double i_c, double sheath_re[3], double sheath_im[3]) {
  CL_REQUIRE(sheath_re && sheath_im, "output arrays must be non-null");
  return guarded([&] {
    const auto cur = oracle::solve_circulating_currents(r_s_ohm_per_km / per_km, omega,
                                                        s_mm / 1e3, d_mm / 1e3, i_c);
    for (int k = 0; k < 3; ++k) {
      sheath_re[k] = cur.sheath[k].real();
      sheath_im[k] = cur.sheath[k].imag();
    }
    return CL_OK;
  });
}

cl_status cl_oracle_sweep(const cl_cable* cable, double lo, double hi, size_t points,
                          cl_oracle_point* out) {
  CL_REQUIRE(cable && out, "cable and out must be non-null");
  CL_REQUIRE(points >= 1 && lo > 0.0 && hi >= lo, "need points >= 1 and 0 < lo <= hi");
  return guarded([&] {
    const auto& f = cable->file;
    const auto g = derive_geometry(f.spec);
    const double omega = f.operating.omega();
    const double x = iec::sheath_reactance(omega, g.conductor_spacing, g.sheath_mean_diameter);
    const double r_c = iec::cable_resistances(f.spec, f.materials, f.operating).conductor_ac;
    for (size_t i = 0; i < points; ++i) {
      const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
      const double q = lo * std::pow(hi / lo, t);
      const double r_s = q * x;
      cl_oracle_point& p = out[i];
      p.rs_over_x = q;
      p.lambda_oracle =
          oracle::oracle_lambda1(r_s, r_c, omega, g.conductor_spacing, g.sheath_mean_diameter);
      p.lambda_standard = iec::lambda1_prime(r_s, r_c, x);
      p.ratio = p.lambda_oracle / p.lambda_standard;
    }
    return CL_OK;
  });
}

cl_status cl_batch_run(const char* const* inputs, size_t count, const char* methods,
                       cl_report** out) {
  CL_REQUIRE(inputs && methods && out, "inputs, methods and out must be non-null");
  return guarded([&] {
    std::vector<std::string> list;
    for (size_t i = 0; i < count; ++i) {
      if (!inputs[i]) throw Error(ErrorCode::invalid_argument, "null input path");
      list.emplace_back(inputs[i]);
    }
    auto rows = bench::run_batch(list, parse_methods(methods));
    *out = new cl_report{std::move(rows)};
    return CL_OK;
  });
}

cl_status cl_sweep_run(const char* base, const char* parameter, const double* values,
                       size_t count, const char* method, cl_report** out) {
  CL_REQUIRE(base && parameter && method && out, "arguments must be non-null");
  CL_REQUIRE(values || count == 0, "values must be non-null");
  return guarded([&] {
    bench::SweepPlan plan;
    auto p = bench::parse_sweep_parameter(parameter);
    if (!p) {
      throw Error(ErrorCode::invalid_argument,
                  std::string("unknown sweep parameter '") + parameter + "'", "parameter");
    }
    auto m = bench::parse_method(method);
    if (!m) throw Error(ErrorCode::invalid_argument, std::string("unknown method '") + method + "'");
    plan.parameter = *p;
    plan.method = *m;
    plan.base = base;
    plan.values.assign(values, values + count);
    *out = new cl_report{bench::run_sweep(plan)};
    return CL_OK;
  });
}

size_t cl_report_row_count(const cl_report* report) { return report ? report->rows.size() : 0; }

size_t cl_report_error_count(const cl_report* report) {
  if (!report) return 0;
  size_t n = 0;
  for (const auto& r : report->rows) n += r.ok ? 0 : 1;
  return n;
}

cl_status cl_report_render(const cl_report* report, const char* format, char** out_text) {
  CL_REQUIRE(report && out_text, "report and out_text must be non-null");
  return guarded([&] {
    *out_text = copy_string(bench::render_report(report->rows, parse_format_or_throw(format)));
    return CL_OK;
  });
}

cl_status cl_report_write(const cl_report* report, const char* format, const char* path) {
  CL_REQUIRE(report && path, "report and path must be non-null");
  return guarded([&] {
    bench::emit_report(report->rows, parse_format_or_throw(format), path);
    return CL_OK;
  });
}

void cl_report_free(cl_report* report) { delete report; }

void cl_string_free(char* text) { std::free(text); }

}  // extern "C"
