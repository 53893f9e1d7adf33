#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "cableloss/bench_io.hpp"
#include "number_format.hpp"

namespace cableloss::bench {

namespace {

enum class Kind { number, integer, text };

struct KeySpec {
  const char* section;
  const char* key;
  Kind kind;
  const char* unit;  // canonical unit token, "" for dimensionless / text
  double scale;      // file value / scale = SI value
  bool required;
};

// Units are fixed per key. A value may repeat its unit after the number;
// any other token is a unit error.
constexpr KeySpec kSchema[] = {
    {"cable", "id", Kind::text, "", 1.0, false},
    {"cable", "voltage", Kind::number, "kV", 1.0, true},
    {"cable", "rated_current", Kind::number, "A", 1.0, true},
    {"cable", "d_c", Kind::number, "mm", 1e3, true},
    {"cable", "d_s", Kind::number, "mm", 1e3, true},
    {"cable", "t_s", Kind::number, "mm", 1e3, true},
    {"cable", "c", Kind::number, "mm", 1e3, true},
    {"cable", "d_a", Kind::number, "mm", 1e3, true},
    {"cable", "D_a", Kind::number, "mm", 1e3, true},
    {"cable", "N", Kind::integer, "", 1.0, true},
    {"cable", "L_c", Kind::number, "m", 1.0, true},
    {"cable", "L_a", Kind::number, "m", 1.0, true},
    {"cable", "conductor", Kind::text, "", 1.0, false},
    {"cable", "sheath", Kind::text, "", 1.0, false},
    {"cable", "mu_real", Kind::number, "", 1.0, true},
    {"cable", "mu_imag", Kind::number, "", 1.0, false},
    {"cable", "cross_section", Kind::number, "mm2", 1e6, false},
    {"cable", "lay", Kind::text, "", 1.0, false},

    {"materials", "conductor_resistivity", Kind::number, "ohm*m", 1.0, false},
    {"materials", "conductor_alpha", Kind::number, "1/K", 1.0, false},
    {"materials", "sheath_resistivity", Kind::number, "ohm*m", 1.0, false},
    {"materials", "sheath_alpha", Kind::number, "1/K", 1.0, false},
    {"materials", "armor_resistivity", Kind::number, "ohm*m", 1.0, false},
    {"materials", "armor_alpha", Kind::number, "1/K", 1.0, false},
    {"materials", "r_c_dc_20", Kind::number, "ohm/km", 1e3, false},
    {"materials", "r_s_dc_20", Kind::number, "ohm/km", 1e3, false},
    {"materials", "r_a_dc_20", Kind::number, "ohm/km", 1e3, false},
    {"materials", "k_s", Kind::number, "", 1.0, false},
    {"materials", "k_p", Kind::number, "", 1.0, false},

    {"operating", "frequency", Kind::number, "Hz", 1.0, false},
    {"operating", "temperature", Kind::number, "degC", 1.0, false},
    {"operating", "current", Kind::number, "A", 1.0, false},

    {"measurements", "p_m0", Kind::number, "W/m", 1.0, false},
    {"measurements", "p_m1", Kind::number, "W/m", 1.0, false},
    {"measurements", "delta_p_m", Kind::number, "W/m", 1.0, false},
    {"measurements", "i_c0", Kind::number, "A", 1.0, true},
    {"measurements", "i_c1", Kind::number, "A", 1.0, true},
    {"measurements", "i_s0", Kind::number, "A", 1.0, true},
    {"measurements", "i_s1", Kind::number, "A", 1.0, true},
    {"measurements", "r_c_dc", Kind::number, "ohm/km", 1e3, true},
    {"measurements", "r_s_dc", Kind::number, "ohm/km", 1e3, true},
    {"measurements", "r_a_dc", Kind::number, "ohm/km", 1e3, false},
    {"measurements", "theta_test", Kind::number, "degC", 1.0, true},
    {"measurements", "y_s", Kind::number, "", 1.0, false},
    {"measurements", "y_p", Kind::number, "", 1.0, false},
    {"measurements", "theta_conductor", Kind::number, "degC", 1.0, false},
    {"measurements", "theta_sheath", Kind::number, "degC", 1.0, false},
    {"measurements", "theta_armor", Kind::number, "degC", 1.0, false},
};

const KeySpec* find_key(const std::string& section, const std::string& key) {
  for (const auto& k : kSchema) {
    if (section == k.section && key == k.key) return &k;
  }
  return nullptr;
}

struct Entry {
  std::string value;
  std::string unit;
  int line = 0;
  int column = 0;
};

using Section = std::map<std::string, Entry>;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

class Document {
 public:
  Document(std::string_view text, std::string source) : source_(std::move(source)) {
    parse(text);
  }

  bool has_section(const std::string& name) const { return sections_.count(name) != 0; }

  const Entry* find(const std::string& section, const std::string& key) const {
    auto s = sections_.find(section);
    if (s == sections_.end()) return nullptr;
    auto e = s->second.find(key);
    return e == s->second.end() ? nullptr : &e->second;
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& msg, const std::string& field,
                         int line, int column) const {
    std::string where = source_;
    if (line > 0) where += ":" + std::to_string(line) + ":" + std::to_string(column);
    throw Error(code, where + ": " + msg, field, line, column);
  }

  void require_keys(const std::string& section) const {
    for (const auto& k : kSchema) {
      if (section == k.section && k.required && !find(section, k.key)) {
        fail(ErrorCode::parse,
             "[" + section + "] is missing required key '" + std::string(k.key) + "'", k.key, 0, 0);
      }
    }
  }

  std::optional<double> number(const std::string& section, const std::string& key) const {
    const Entry* e = find(section, key);
    if (!e) return std::nullopt;
    const KeySpec* spec = find_key(section, key);
    auto v = detail::parse_double(e->value);
    if (!v || !std::isfinite(*v)) {
      fail(ErrorCode::parse, "value of '" + key + "' is not a finite number: '" + e->value + "'",
           key, e->line, e->column);
    }
    return *v / spec->scale;
  }

  std::optional<int> integer(const std::string& section, const std::string& key) const {
    const Entry* e = find(section, key);
    if (!e) return std::nullopt;
    auto v = detail::parse_double(e->value);
    if (!v || *v != std::floor(*v) || std::abs(*v) > 1e9) {
      fail(ErrorCode::parse, "value of '" + key + "' must be an integer: '" + e->value + "'", key,
           e->line, e->column);
    }
    return static_cast<int>(*v);
  }

  std::optional<std::string> text(const std::string& section, const std::string& key) const {
    const Entry* e = find(section, key);
    if (!e) return std::nullopt;
    return e->value;
  }

  int line_of(const std::string& section, const std::string& key) const {
    const Entry* e = find(section, key);
    return e ? e->line : 0;
  }

  const std::string& source() const { return source_; }

 private:
  void parse(std::string_view text) {
    std::string current;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto eol = text.find('\n', pos);
      std::string_view raw =
          text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
      pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
      ++line_no;

      std::string_view line = raw;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      const std::string content = trim(line);
      if (content.empty()) continue;
      const int indent = static_cast<int>(raw.find_first_not_of(" \t")) + 1;

      if (content.front() == '[') {
        if (content.back() != ']') {
          fail(ErrorCode::parse, "malformed section header", "", line_no, indent);
        }
        current = trim(std::string_view(content).substr(1, content.size() - 2));
        if (current != "cable" && current != "materials" && current != "operating" &&
            current != "measurements") {
          fail(ErrorCode::parse, "unknown section [" + current + "]", current, line_no, indent);
        }
        if (!sections_.emplace(current, Section{}).second) {
          fail(ErrorCode::parse, "duplicate section [" + current + "]", current, line_no, indent);
        }
        continue;
      }

      const auto eq = content.find('=');
      if (eq == std::string::npos) {
        fail(ErrorCode::parse, "expected 'key = value'", "", line_no, indent);
      }
      if (current.empty()) {
        fail(ErrorCode::parse, "key outside of any section", "", line_no, indent);
      }
      const std::string key = trim(std::string_view(content).substr(0, eq));
      std::string rest = trim(std::string_view(content).substr(eq + 1));
      const auto eq_raw = raw.find('=');
      const auto value_start = raw.find_first_not_of(" \t", eq_raw + 1);
      const int value_column =
          static_cast<int>(value_start == std::string_view::npos ? eq_raw + 1 : value_start) + 1;

      const KeySpec* spec = find_key(current, key);
      if (!spec) {
        fail(ErrorCode::parse, "unknown key '" + key + "' in [" + current + "]", key, line_no,
             indent);
      }
      if (rest.empty()) {
        fail(ErrorCode::parse, "missing value for '" + key + "'", key, line_no, value_column);
      }

      Entry entry{rest, "", line_no, value_column};
      if (spec->kind != Kind::text) {
        const auto space = rest.find_first_of(" \t");
        if (space != std::string::npos) {
          entry.value = rest.substr(0, space);
          entry.unit = trim(std::string_view(rest).substr(space));
          if (entry.unit != spec->unit) {
            const std::string expected = *spec->unit ? spec->unit : "no unit (dimensionless)";
            fail(ErrorCode::unit,
                 "unit '" + entry.unit + "' for '" + key + "' does not match " + expected, key,
                 line_no, value_column + static_cast<int>(space) + 1);
          }
        }
      }
      if (!sections_[current].emplace(key, entry).second) {
        fail(ErrorCode::parse, "duplicate key '" + key + "'", key, line_no, indent);
      }
    }
  }

  std::string source_;
  std::map<std::string, Section> sections_;
};

template <typename T>
void assign(std::optional<T> v, T& target) {
  if (v) target = *v;
}

}  // namespace

CableFile parse_cable_text(std::string_view text, const std::string& source,
                           const std::string& default_id) {
  const Document doc(text, source);
  if (!doc.has_section("cable")) {
    doc.fail(ErrorCode::parse, "missing [cable] section", "cable", 0, 0);
  }
  doc.require_keys("cable");

  CableFile out;
  CableSpec& s = out.spec;
  s.id = doc.text("cable", "id").value_or(default_id);
  s.voltage_kv = *doc.number("cable", "voltage");
  s.rated_current = *doc.number("cable", "rated_current");
  s.conductor_diameter = *doc.number("cable", "d_c");
  s.sheath_outer_diameter = *doc.number("cable", "d_s");
  s.sheath_thickness = *doc.number("cable", "t_s");
  s.core_offset = *doc.number("cable", "c");
  s.armor_wire_diameter = *doc.number("cable", "d_a");
  s.armor_mean_diameter = *doc.number("cable", "D_a");
  s.armor_wire_count = *doc.integer("cable", "N");
  s.phase_lay_length = *doc.number("cable", "L_c");
  s.armor_lay_length = *doc.number("cable", "L_a");
  s.armor_mu_real = *doc.number("cable", "mu_real");
  assign(doc.number("cable", "mu_imag"), s.armor_mu_imag);
  assign(doc.number("cable", "cross_section"), s.cross_section);

  if (auto c = doc.text("cable", "conductor")) {
    if (*c == "copper") {
      s.conductor_material = ConductorMaterial::copper;
    } else if (*c == "aluminum" || *c == "aluminium") {
      s.conductor_material = ConductorMaterial::aluminum;
    } else {
      doc.fail(ErrorCode::parse, "conductor must be copper or aluminum, got '" + *c + "'",
               "conductor", doc.line_of("cable", "conductor"), 1);
    }
  }
  if (auto sh = doc.text("cable", "sheath"); sh && *sh != "lead") {
    doc.fail(ErrorCode::parse, "sheath material must be lead, got '" + *sh + "'", "sheath",
             doc.line_of("cable", "sheath"), 1);
  }
  if (auto lay = doc.text("cable", "lay")) {
    if (*lay == "equal") {
      doc.fail(ErrorCode::invalid_spec,
               "equal-lay cables are not supported: the crossing pitch formula requires armor "
               "and phases twisted in opposite directions (contralay)",
               "lay", doc.line_of("cable", "lay"), 1);
    }
    if (*lay != "contralay") {
      doc.fail(ErrorCode::parse, "lay must be contralay or equal, got '" + *lay + "'", "lay",
               doc.line_of("cable", "lay"), 1);
    }
  }

  try {
    validate(s);
  } catch (const Error& e) {
    doc.fail(e.code(), e.what(), e.field(), doc.line_of("cable", e.field()), 1);
  }

  iec::MaterialSet& m = out.materials;
  m = iec::default_materials(s);
  assign(doc.number("materials", "conductor_resistivity"), m.conductor.resistivity_20c);
  assign(doc.number("materials", "conductor_alpha"), m.conductor.temp_coefficient);
  assign(doc.number("materials", "sheath_resistivity"), m.sheath.resistivity_20c);
  assign(doc.number("materials", "sheath_alpha"), m.sheath.temp_coefficient);
  assign(doc.number("materials", "armor_resistivity"), m.armor.resistivity_20c);
  assign(doc.number("materials", "armor_alpha"), m.armor.temp_coefficient);
  m.conductor_dc_20 = doc.number("materials", "r_c_dc_20");
  m.sheath_dc_20 = doc.number("materials", "r_s_dc_20");
  m.armor_dc_20 = doc.number("materials", "r_a_dc_20");
  assign(doc.number("materials", "k_s"), m.k_s);
  assign(doc.number("materials", "k_p"), m.k_p);
  for (const char* key : {"conductor_resistivity", "sheath_resistivity", "armor_resistivity",
                          "r_c_dc_20", "r_s_dc_20", "r_a_dc_20", "k_s", "k_p"}) {
    if (auto v = doc.number("materials", key); v && !(*v > 0.0)) {
      doc.fail(ErrorCode::invalid_spec, std::string(key) + " must be positive", key,
               doc.line_of("materials", key), 1);
    }
  }

  iec::OperatingPoint& op = out.operating;
  op.conductor_current = s.rated_current;
  assign(doc.number("operating", "frequency"), op.frequency);
  assign(doc.number("operating", "temperature"), op.ambient_temp);
  assign(doc.number("operating", "current"), op.conductor_current);
  try {
    iec::validate(op);
  } catch (const Error& e) {
    doc.fail(e.code(), e.what(), e.field(), doc.line_of("operating", e.field()), 1);
  }

  if (doc.has_section("measurements")) {
    doc.require_keys("measurements");
    em::TestMeasurements t;
    const auto p0 = doc.number("measurements", "p_m0");
    const auto p1 = doc.number("measurements", "p_m1");
    const auto dp = doc.number("measurements", "delta_p_m");
    if (dp && (p0 || p1)) {
      doc.fail(ErrorCode::parse, "give either delta_p_m or p_m0/p_m1, not both", "delta_p_m",
               doc.line_of("measurements", "delta_p_m"), 1);
    }
    if (dp) {
      t.p_m0 = 0.0;
      t.p_m1 = *dp;
    } else if (p0 && p1) {
      t.p_m0 = *p0;
      t.p_m1 = *p1;
    } else {
      doc.fail(ErrorCode::parse, "[measurements] needs p_m0 and p_m1 (or delta_p_m)",
               p0 ? "p_m1" : "p_m0", 0, 0);
    }
    t.i_c0 = *doc.number("measurements", "i_c0");
    t.i_c1 = *doc.number("measurements", "i_c1");
    t.i_s0 = *doc.number("measurements", "i_s0");
    t.i_s1 = *doc.number("measurements", "i_s1");
    t.r_c_dc = *doc.number("measurements", "r_c_dc");
    t.r_s_dc = *doc.number("measurements", "r_s_dc");
    t.theta_test = *doc.number("measurements", "theta_test");
    t.theta_conductor = doc.number("measurements", "theta_conductor");
    t.theta_sheath = doc.number("measurements", "theta_sheath");
    t.theta_armor = doc.number("measurements", "theta_armor");

    try {
      if (!(t.r_c_dc > 0.0)) throw Error(ErrorCode::invalid_spec, "r_c_dc must be positive", "r_c_dc");
      const double s_axes = trefoil_spacing(s.core_offset);
      t.y_s = doc.number("measurements", "y_s")
                  .value_or(iec::skin_effect_factor(t.r_c_dc, op.frequency, m.k_s));
      t.y_p = doc.number("measurements", "y_p")
                  .value_or(iec::proximity_effect_factor(t.r_c_dc, op.frequency,
                                                         s.conductor_diameter, s_axes, m.k_p));
      t.r_a_dc = doc.number("measurements", "r_a_dc")
                     .value_or(iec::dc_resistance_at_temp(iec::armor_dc_resistance_20(s, m),
                                                          m.armor.temp_coefficient, t.theta_test));
      em::validate(t);
    } catch (const Error& e) {
      doc.fail(e.code(), e.what(), e.field(), doc.line_of("measurements", e.field()), 1);
    }
    out.measurements = t;
  }
  return out;
}

CableFile load_cable_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::io, "cannot open cable file '" + path.string() + "'", path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cable_text(buf.str(), path.string(), path.stem().string());
}

std::string write_cable_text(const CableFile& file) {
  using detail::format_number;
  using detail::format_scaled;
  const CableSpec& s = file.spec;
  std::ostringstream o;
  auto line = [&](const char* key, const std::string& value, const char* unit = "") {
    o << key << " = " << value;
    if (*unit) o << ' ' << unit;
    o << '\n';
  };

  o << "[cable]\n";
  line("id", s.id);
  line("voltage", format_number(s.voltage_kv), "kV");
  line("rated_current", format_number(s.rated_current), "A");
  line("d_c", format_scaled(s.conductor_diameter, 1e3), "mm");
  line("d_s", format_scaled(s.sheath_outer_diameter, 1e3), "mm");
  line("t_s", format_scaled(s.sheath_thickness, 1e3), "mm");
  line("c", format_scaled(s.core_offset, 1e3), "mm");
  line("d_a", format_scaled(s.armor_wire_diameter, 1e3), "mm");
  line("D_a", format_scaled(s.armor_mean_diameter, 1e3), "mm");
  line("N", std::to_string(s.armor_wire_count));
  line("L_c", format_number(s.phase_lay_length), "m");
  line("L_a", format_number(s.armor_lay_length), "m");
  line("conductor", to_string(s.conductor_material));
  line("sheath", to_string(s.sheath_material));
  line("mu_real", format_number(s.armor_mu_real));
  line("mu_imag", format_number(s.armor_mu_imag));
  if (s.cross_section > 0.0) line("cross_section", format_scaled(s.cross_section, 1e6), "mm2");

  const auto& m = file.materials;
  o << "\n[materials]\n";
  line("conductor_resistivity", format_number(m.conductor.resistivity_20c), "ohm*m");
  line("conductor_alpha", format_number(m.conductor.temp_coefficient), "1/K");
  line("sheath_resistivity", format_number(m.sheath.resistivity_20c), "ohm*m");
  line("sheath_alpha", format_number(m.sheath.temp_coefficient), "1/K");
  line("armor_resistivity", format_number(m.armor.resistivity_20c), "ohm*m");
  line("armor_alpha", format_number(m.armor.temp_coefficient), "1/K");
  if (m.conductor_dc_20) line("r_c_dc_20", format_scaled(*m.conductor_dc_20, 1e3), "ohm/km");
  if (m.sheath_dc_20) line("r_s_dc_20", format_scaled(*m.sheath_dc_20, 1e3), "ohm/km");
  if (m.armor_dc_20) line("r_a_dc_20", format_scaled(*m.armor_dc_20, 1e3), "ohm/km");
  line("k_s", format_number(m.k_s));
  line("k_p", format_number(m.k_p));

  const auto& op = file.operating;
  o << "\n[operating]\n";
  line("frequency", format_number(op.frequency), "Hz");
  line("temperature", format_number(op.ambient_temp), "degC");
  line("current", format_number(op.conductor_current), "A");

  if (file.measurements) {
    const auto& t = *file.measurements;
    o << "\n[measurements]\n";
    line("p_m0", format_number(t.p_m0), "W/m");
    line("p_m1", format_number(t.p_m1), "W/m");
    line("i_c0", format_number(t.i_c0), "A");
    line("i_c1", format_number(t.i_c1), "A");
    line("i_s0", format_number(t.i_s0), "A");
    line("i_s1", format_number(t.i_s1), "A");
    line("r_c_dc", format_scaled(t.r_c_dc, 1e3), "ohm/km");
    line("r_s_dc", format_scaled(t.r_s_dc, 1e3), "ohm/km");
    line("r_a_dc", format_scaled(t.r_a_dc, 1e3), "ohm/km");
    line("theta_test", format_number(t.theta_test), "degC");
    line("y_s", format_number(t.y_s));
    line("y_p", format_number(t.y_p));
    if (t.theta_conductor) line("theta_conductor", format_number(*t.theta_conductor), "degC");
    if (t.theta_sheath) line("theta_sheath", format_number(*t.theta_sheath), "degC");
    if (t.theta_armor) line("theta_armor", format_number(*t.theta_armor), "degC");
  }
  return o.str();
}

}  // namespace cableloss::bench
