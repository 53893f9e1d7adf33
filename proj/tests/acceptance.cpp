// Acceptance checks. One line per criterion; exit status is nonzero if any fails.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "cableloss/bench_io.hpp"
#include "cableloss/corrections.hpp"
#include "cableloss/em_pipeline.hpp"
#include "cableloss/iec60287.hpp"
#include "cableloss/mesh_oracle.hpp"

using namespace cableloss;
namespace fs = std::filesystem;

namespace {

const fs::path data_dir = CABLELOSS_DATA_DIR;

struct BenchRow {
  const char* name;
  double p_a;       // reported armor loss, W/m
  double dps;       // reported sheath Joule-loss difference, W/m
};

const BenchRow bench_rows[] = {
    {"30kV", 0.518, 0.308},
    {"132kV", 9.66, 9.76},
    {"150kV", 5.93, 7.933},
    {"275kV", 11.06, 14.16},
};

bench::CableFile load_bench(const char* name) {
  return bench::load_cable_file(data_dir / "fixtures" / (std::string("bench-") + name + ".cable"));
}

em::AllocationResult improved(const bench::CableFile& f) {
  return em::improved_em(*f.measurements, derive_geometry(f.spec), f.spec);
}

std::string detail;

void note(const char* fmt, double a, double b, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  if (!detail.empty()) detail += "; ";
  detail += buf;
}

bool armor_loss_identity() {
  bool ok = true;
  for (const auto& row : bench_rows) {
    const auto r = improved(load_bench(row.name));
    const double diff = std::abs(r.p_a - row.p_a);
    note("%.0f: %.4f vs %g", load_bench(row.name).spec.voltage_kv, r.p_a, row.p_a);
    ok = ok && diff <= 0.01 + 1e-12;
  }
  return ok;
}

bool sheath_joule_chain() {
  bool ok = true;
  for (const auto& row : bench_rows) {
    const auto f = load_bench(row.name);
    const auto r = improved(f);
    const double rel = std::abs(r.delta_p_s_j - row.dps) / row.dps;
    note("%.0f: %.4f (%.2f%%)", f.spec.voltage_kv, r.delta_p_s_j, 100 * rel);
    ok = ok && rel <= 0.01;
  }
  return ok;
}

bool oracle_ratio() {
  const auto f = bench::load_template("30kV");
  const auto g = derive_geometry(f.spec);
  const double w = f.operating.omega();
  const double x = iec::sheath_reactance(w, g.conductor_spacing, g.sheath_mean_diameter);
  const double r_c = iec::cable_resistances(f.spec, f.materials, f.operating).conductor_ac;
  double worst = 0.0;
  const int points = 20;
  for (int i = 0; i < points; ++i) {
    const double q = 0.05 * std::pow(100.0, static_cast<double>(i) / (points - 1));
    const double r_s = q * x;
    const double ratio = oracle::oracle_lambda1(r_s, r_c, w, g.conductor_spacing,
                                                g.sheath_mean_diameter) /
                         iec::lambda1_prime(r_s, r_c, x);
    worst = std::max(worst, std::abs(ratio / (2.0 / 3.0) - 1.0));
  }
  note("20 points, worst deviation from 2/3 %.2e", worst, 0.0);
  return worst <= 0.005;
}

bool trivial_limits() {
  bool ok = true;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      if (!detail.empty()) detail += "; ";
      detail += std::string("failed: ") + what;
    }
    ok = ok && cond;
  };
  expect(corrections::conductor_proximity_correction(0.5478, 0.041, 0.09717, 0.0353, 0.004, 1.0) ==
             1.0,
         "f_c at mu'=1");
  expect(lay_factor(0.0, 1.4) == 1.0, "lay factor at c=0");
  expect(iec::sheath_reactance(2 * M_PI * 50, 0.02, 0.04) == 0.0, "reactance at 2s=d");
  bool symmetric = true;
  for (double a : {0.5, 0.9, 1.4, 2.6, 3.8})
    for (double b : {0.9, 1.8, 3.4, 4.8}) symmetric = symmetric && crossing_pitch(a, b) == crossing_pitch(b, a);
  expect(symmetric, "crossing pitch symmetry");

  corrections::CorrectionFactors neutral;
  neutral.f_c = 1.0;
  neutral.y_c = 0.0;
  neutral.y_a = 0.0;
  bool reduces = true;
  for (const auto& row : bench_rows) {
    const auto& m = *load_bench(row.name).measurements;
    const auto a = em::improved_em(m, neutral);
    const auto b = em::original_em(m);
    reduces = reduces && a.p_a == b.p_a && a.delta_p_s_j == b.delta_p_s_j && a.delta_p_c_j == 0.0;
  }
  expect(reduces, "improved reduces to original");
  if (ok) detail = "5 limits exact";
  return ok;
}

bool method_discrimination() {
  const auto f = load_bench("30kV");
  const auto& m = *f.measurements;
  const double reference = 0.518 / (1.0 + 0.023);
  const double e_imp = em::relative_error(improved(f).p_a, reference);
  const double e_orig = em::relative_error(em::original_em(m).p_a, reference);
  note("improved %+.2f%%, original %+.2f%%", 100 * e_imp, 100 * e_orig);
  return std::abs(std::abs(e_imp) - 0.023) <= 0.0005 && std::abs(e_orig) > 0.15;
}

bool batch_determinism() {
  std::vector<std::string> inputs;
  for (const auto& n : bench::template_names()) inputs.push_back("template:" + n);
  const auto methods = bench::all_methods();
  const auto a = bench::format_csv(bench::run_batch(inputs, methods));
  const auto b = bench::format_csv(bench::run_batch(inputs, methods));

  const auto bad = fs::temp_directory_path() / "cableloss-acceptance-corrupt.cable";
  {
    std::ofstream out(bad);
    out << "[cable]\nid = broken\nd_c = 13.4 mm\nthis line is not a key value pair\n";
  }
  auto mixed = inputs;
  mixed[3] = bad.string();
  const auto rows = bench::run_batch(mixed, {bench::Method::iec});
  fs::remove(bad);
  int errors = 0, good = 0;
  for (const auto& r : rows) (r.ok ? good : errors)++;
  detail = std::string("identical CSV: ") + (a == b ? "yes" : "no") + "; corrupt batch " +
           std::to_string(errors) + " error / " + std::to_string(good) + " ok rows";
  return a == b && errors == 1 && good == 5;
}

bool same_6_sig(double a, double b) {
  char x[32], y[32];
  std::snprintf(x, sizeof x, "%.5e", a);
  std::snprintf(y, sizeof y, "%.5e", b);
  return std::string(x) == y;
}

bool iec_golden() {
  const auto f = bench::load_template("30kV");
  const auto lb = iec::allocate_iec(f.spec, f.materials, f.operating, iec::EddyMode::included);
  note("lambda1'' %.10g, lambda2 %.10g", lb.lambda1_doubleprime, lb.lambda2);
  return same_6_sig(lb.lambda1_doubleprime, 0.004254378826) && same_6_sig(lb.lambda2, 0.1241770117);
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<bool()> check;
  };
  const Criterion criteria[] = {
      {"armor loss identity on bench fixtures", armor_loss_identity},
      {"sheath Joule-loss difference from geometry", sheath_joule_chain},
      {"filament solve vs circulating-current factor", oracle_ratio},
      {"trivial limits", trivial_limits},
      {"improved vs original relative error", method_discrimination},
      {"batch determinism and isolation", batch_determinism},
      {"eddy and armor factor golden values", iec_golden},
  };
  int failures = 0;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    detail.clear();
    bool ok = false;
    try {
      ok = c.check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d: %s  %s (%s)\n", n, ok ? "PASS" : "FAIL", c.title, detail.c_str());
    failures += ok ? 0 : 1;
  }
  std::printf("%d of %d criteria passed\n", n - failures, n);
  return failures == 0 ? 0 : 1;
}
