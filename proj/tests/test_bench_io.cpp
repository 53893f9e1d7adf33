#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cableloss/bench_io.hpp"
#include "cableloss/error.hpp"
#include "test_support.hpp"

using namespace cableloss;
using namespace cableloss::bench;
using doctest::Approx;
namespace fs = std::filesystem;

namespace {

const fs::path data_dir = CABLELOSS_DATA_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<std::string> template_inputs() {
  std::vector<std::string> out;
  for (const auto& n : template_names()) out.push_back("template:" + n);
  return out;
}

std::vector<std::string> fixture_paths() {
  std::vector<std::string> out;
  for (const char* n : {"30kV", "132kV", "150kV", "275kV"}) {
    out.push_back((data_dir / "fixtures" / ("bench-" + std::string(n) + ".cable")).string());
  }
  return out;
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "cableloss-tests";
  fs::create_directories(dir);
  return dir / name;
}

// Replace the first line starting with `key` (or drop it when `line` is empty).
std::string edit_key(std::string text, const std::string& key, const std::string& line) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string l;
  bool done = false;
  while (std::getline(in, l)) {
    if (!done && l.rfind(key + " ", 0) == 0) {
      done = true;
      if (!line.empty()) out << line << '\n';
      continue;
    }
    out << l << '\n';
  }
  return out.str();
}

Error parse_error(const std::string& text) {
  try {
    parse_cable_text(text, "t.cable");
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse failure");
  return Error(ErrorCode::parse, "");
}

}  // namespace

TEST_CASE("bundled templates") {
  const auto names = template_names();
  REQUIRE(names == std::vector<std::string>{"30kV", "115kV", "132kV", "150kV", "220kV", "275kV"});
  for (const auto& n : names) {
    CAPTURE(n);
    CHECK(template_text(n) == slurp(data_dir / "templates" / (n + ".cable")));
    CHECK(load_template(n) == load_cable_file(data_dir / "templates" / (n + ".cable")));
    CHECK(load_input("template:" + n) == load_template(n));
  }
  CHECK_THROWS_AS(template_text("33kV"), Error);
}

TEST_CASE("30 kV template carries the expected spec") {
  const auto f = load_template("30kV");
  const auto want = test::cable30();
  const auto& s = f.spec;
  CHECK(s.id == "30kV");
  CHECK(s.voltage_kv == 30);
  CHECK(s.rated_current == 200);
  CHECK(s.conductor_diameter == Approx(want.conductor_diameter).epsilon(1e-15));
  CHECK(s.sheath_outer_diameter == Approx(want.sheath_outer_diameter).epsilon(1e-15));
  CHECK(s.sheath_thickness == Approx(want.sheath_thickness).epsilon(1e-15));
  CHECK(s.core_offset == Approx(want.core_offset).epsilon(1e-15));
  CHECK(s.armor_wire_diameter == Approx(want.armor_wire_diameter).epsilon(1e-15));
  CHECK(s.armor_mean_diameter == Approx(want.armor_mean_diameter).epsilon(1e-15));
  CHECK(s.armor_wire_count == 69);
  CHECK(s.phase_lay_length == 1.4);
  CHECK(s.armor_lay_length == 0.9);
  CHECK(s.armor_mu_real == 300);
  CHECK(s.armor_mu_imag == 200);
  CHECK(f.operating.frequency == 50);
  CHECK(f.operating.ambient_temp == 20);
  CHECK(f.operating.conductor_current == 200);
  CHECK_FALSE(f.measurements);
}

TEST_CASE("bench fixtures load with measurements") {
  for (const auto& p : fixture_paths()) {
    CAPTURE(p);
    const auto f = load_cable_file(p);
    REQUIRE(f.measurements);
    CHECK(f.measurements->p_m0 == 0.0);
    CHECK(f.measurements->delta_p_m() > 0.0);
    CHECK(f.measurements->r_a_dc > 0.0);
    CHECK(f.measurements->y_s > 0.0);
  }
}

TEST_CASE("write then parse is idempotent") {
  std::vector<CableFile> files;
  for (const auto& n : template_names()) files.push_back(load_template(n));
  for (const auto& p : fixture_paths()) files.push_back(load_cable_file(p));
  for (const auto& f : files) {
    CAPTURE(f.spec.id);
    const auto text = write_cable_text(f);
    const auto again = parse_cable_text(text);
    CHECK(again == f);
    CHECK(write_cable_text(again) == text);
  }
}

TEST_CASE("missing key is named") {
  const auto e = parse_error(edit_key(template_text("30kV"), "L_a", ""));
  CHECK(e.code() == ErrorCode::parse);
  CHECK(e.field() == "L_a");
  CHECK(std::string(e.what()).find("L_a") != std::string::npos);
}

TEST_CASE("thick sheath is rejected") {
  const auto e = parse_error(edit_key(template_text("30kV"), "t_s", "t_s = 20 mm"));
  CHECK(e.code() == ErrorCode::invalid_spec);
  CHECK(e.line() > 0);
}

TEST_CASE("units are fixed per key") {
  auto e = parse_error(edit_key(template_text("30kV"), "d_c", "d_c = 13.4 m"));
  CHECK(e.code() == ErrorCode::unit);
  CHECK(e.field() == "d_c");
  CHECK(e.line() == 6);
  CHECK(e.column() > 0);
  // unit tokens are optional
  CHECK_NOTHROW(parse_cable_text(edit_key(template_text("30kV"), "d_c", "d_c = 13.4")));
}

TEST_CASE("malformed documents") {
  const auto base = template_text("30kV");
  CHECK(parse_error(base + "\n[cable]\nfoo = 1\n").code() == ErrorCode::parse);
  CHECK(parse_error(edit_key(base, "d_c", "d_c = 13.4 mm\nd_c = 13.5 mm")).code() ==
        ErrorCode::parse);
  CHECK(parse_error(edit_key(base, "d_c", "d_c = abc mm")).code() == ErrorCode::parse);
  CHECK(parse_error(base + "\n[wires]\n").code() == ErrorCode::parse);
  CHECK(parse_error(edit_key(base, "lay", "lay = equal")).code() == ErrorCode::invalid_spec);
  CHECK(parse_error(edit_key(base, "d_c", "d_c 13.4 mm")).code() == ErrorCode::parse);
}

TEST_CASE("missing file is an io error") {
  try {
    load_cable_file("/nonexistent/x.cable");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io);
  }
}

TEST_CASE("batch cardinality and order") {
  const std::vector<Method> em{Method::original, Method::legacy, Method::improved};
  const auto rows = run_batch(template_inputs(), em);
  REQUIRE(rows.size() == 18);
  CHECK(rows[0].cable_id == "30kV");
  CHECK(rows[0].method == "original");
  CHECK(rows[2].method == "improved");
  CHECK(rows[17].cable_id == "275kV");
  // templates carry no bench data
  for (const auto& r : rows) CHECK_FALSE(r.ok);

  const auto csv = format_csv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 19);

  const auto ok = run_batch(fixture_paths(), em);
  REQUIRE(ok.size() == 12);
  for (const auto& r : ok) CHECK(r.ok);
}

TEST_CASE("batch is deterministic") {
  const auto a = format_csv(run_batch(template_inputs(), all_methods()));
  const auto b = format_csv(run_batch(template_inputs(), all_methods()));
  CHECK(a == b);
}

TEST_CASE("one corrupt file does not stop the batch") {
  const auto bad = scratch("corrupt.cable");
  {
    std::ofstream f(bad);
    f << "[cable]\nd_c = twelve mm\n";
  }
  auto inputs = template_inputs();
  inputs[2] = bad.string();
  const auto rows = run_batch(inputs, {Method::iec});
  REQUIRE(rows.size() == 6);
  CHECK_FALSE(rows[2].ok);
  CHECK(rows[2].cable_id == "corrupt");
  CHECK(rows[2].error.find("parse") != std::string::npos);
  int good = 0;
  for (const auto& r : rows) good += r.ok ? 1 : 0;
  CHECK(good == 5);
  CHECK_THROWS_AS(run_batch({}, {Method::iec}), Error);
  CHECK_THROWS_AS(run_batch(inputs, {}), Error);
}

TEST_CASE("report rows survive a JSON round trip") {
  auto rows = run_batch(fixture_paths(), all_methods());
  auto sweep = run_sweep({SweepParameter::mu_real, {1.0, 300.0}, "template:30kV", Method::iec});
  rows.insert(rows.end(), sweep.begin(), sweep.end());
  rows.push_back(run_batch({"/nonexistent.cable"}, {Method::iec}).front());
  CHECK(parse_json_report(format_json(rows)) == rows);
}

TEST_CASE("emit report") {
  const auto rows = run_batch({"template:30kV"}, {Method::iec});
  CHECK_THROWS_AS(emit_report({}, ReportFormat::csv, scratch("empty.csv")), Error);
  try {
    emit_report(rows, ReportFormat::csv, "/nonexistent/dir/out.csv");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io);
    CHECK(std::string(e.what()).find("/nonexistent/dir/out.csv") != std::string::npos);
  }
  const auto out = scratch("one.json");
  emit_report(rows, ReportFormat::json, out);
  CHECK(parse_json_report(slurp(out)) == rows);
}

TEST_CASE("mu' sweep raises f_c") {
  const auto rows =
      run_sweep({SweepParameter::mu_real, {100.0, 300.0, 600.0}, "template:30kV", Method::iec});
  REQUIRE(rows.size() == 3);
  CHECK(*rows[0].f_c < *rows[1].f_c);
  CHECK(*rows[1].f_c < *rows[2].f_c);
  CHECK(*rows[0].f_c > 1.0);
  for (const auto& r : rows) CHECK(r.sweep_parameter == std::string("mu_real"));
}

TEST_CASE("single-point sweep matches the batch row") {
  auto point = run_sweep({SweepParameter::mu_real, {300.0}, "template:30kV", Method::iec}).at(0);
  const auto batch = run_batch({"template:30kV"}, {Method::iec}).at(0);
  point.sweep_parameter.reset();
  point.sweep_value.reset();
  CHECK(point == batch);
}

TEST_CASE("temperature sweep scales DC resistances linearly") {
  const auto rows = run_sweep(
      {SweepParameter::ambient_temp, {2.0, 20.0, 30.0}, "template:30kV", Method::iec});
  REQUIRE(rows.size() == 3);
  for (auto member : {&ReportRow::r_c_dc, &ReportRow::r_s_dc, &ReportRow::r_a_dc}) {
    const double a = *(rows[0].*member), b = *(rows[1].*member), c = *(rows[2].*member);
    CHECK((b - a) / 18.0 == Approx((c - b) / 10.0).epsilon(1e-9));
    CHECK(c > b);
  }
}

TEST_CASE("invalid sweep points become error rows") {
  const auto rows =
      run_sweep({SweepParameter::armor_wire_count, {0.0, 69.0, 2.5}, "template:30kV", Method::iec});
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].ok);
  CHECK(rows[1].ok);
  CHECK_FALSE(rows[2].ok);
  const auto bad_mu =
      run_sweep({SweepParameter::mu_real, {0.5}, "template:30kV", Method::improved});
  CHECK_FALSE(bad_mu[0].ok);
  CHECK_THROWS_AS(run_sweep({SweepParameter::mu_real, {}, "template:30kV", Method::iec}), Error);
}

TEST_CASE("warnings reach the report") {
  const auto rows =
      run_sweep({SweepParameter::mu_real, {1.2}, "template:275kV", Method::iec});
  // y_a < 0 for this crossing pitch with a nearly non-magnetic armor
  REQUIRE(rows[0].ok);
  REQUIRE(rows[0].y_a);
  CHECK(*rows[0].y_a < 0.0);
  const auto w = make_warning(WarningCode::ya_negative).message;
  CHECK(std::find(rows[0].warnings.begin(), rows[0].warnings.end(), w) != rows[0].warnings.end());
}

TEST_CASE("names") {
  for (auto m : all_methods()) CHECK(parse_method(to_string(m)) == m);
  CHECK(parse_sweep_parameter("L_c") == SweepParameter::phase_lay);
  CHECK(parse_sweep_parameter("temperature") == SweepParameter::ambient_temp);
  CHECK_FALSE(parse_sweep_parameter("colour"));
  CHECK(linear_range(1.0, 2.0, 3) == std::vector<double>{1.0, 1.5, 2.0});
  CHECK(linear_range(4.0, 9.0, 1) == std::vector<double>{4.0});
}
