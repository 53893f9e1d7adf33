#include "cableloss/bench_io.hpp"

#include <map>

namespace cableloss::bench {

namespace {

// Published geometry rows, copper conductors, mu_r = 300 - j200.
const std::map<std::string, std::string>& templates() {
  static const std::map<std::string, std::string> t = {
      {"30kV", R"(# Three-core armored cable, 30 kV, copper conductors, lead sheaths.
[cable]
id = 30kV
voltage = 30 kV
rated_current = 200 A
d_c = 13.4 mm
d_s = 37 mm
t_s = 1.7 mm
c = 23.67 mm
d_a = 4 mm
D_a = 97.17 mm
N = 69
L_c = 1.4 m
L_a = 0.9 m
conductor = copper
sheath = lead
mu_real = 300
mu_imag = 200
lay = contralay

[operating]
frequency = 50 Hz
temperature = 20 degC
current = 200 A
)"},
      {"115kV", R"(# Three-core armored cable, 115 kV, copper conductors, lead sheaths.
[cable]
id = 115kV
voltage = 115 kV
rated_current = 530 A
d_c = 23.5 mm
d_s = 78.7 mm
t_s = 3.3 mm
c = 49.48 mm
d_a = 6 mm
D_a = 196.2 mm
N = 98
L_c = 1.5 m
L_a = 3.1 m
conductor = copper
sheath = lead
mu_real = 300
mu_imag = 200
lay = contralay

[operating]
frequency = 50 Hz
temperature = 20 degC
current = 530 A
)"},
      {"132kV", R"(# Three-core armored cable, 132 kV, copper conductors, lead sheaths.
[cable]
id = 132kV
voltage = 132 kV
rated_current = 900 A
d_c = 34.5 mm
d_s = 82.5 mm
t_s = 2.5 mm
c = 50.23 mm
d_a = 5.6 mm
D_a = 110 mm
N = 204
L_c = 2.6 m
L_a = 3.4 m
conductor = copper
sheath = lead
mu_real = 300
mu_imag = 200
lay = contralay

[operating]
frequency = 50 Hz
temperature = 20 degC
current = 900 A
)"},
      {"150kV", R"(# Three-core armored cable, 150 kV, copper conductors, lead sheaths.
[cable]
id = 150kV
voltage = 150 kV
rated_current = 650 A
d_c = 30.25 mm
d_s = 80.6 mm
t_s = 2.8 mm
c = 49.42 mm
d_a = 6 mm
D_a = 195 mm
N = 95
L_c = 2.6 m
L_a = 1.8 m
conductor = copper
sheath = lead
mu_real = 300
mu_imag = 200
lay = contralay

[operating]
frequency = 50 Hz
temperature = 20 degC
current = 650 A
)"},
      {"220kV", R"(# Three-core armored cable, 220 kV, copper conductors, lead sheaths.
[cable]
id = 220kV
voltage = 220 kV
rated_current = 975 A
d_c = 49 mm
d_s = 104 mm
t_s = 3 mm
c = 62.35 mm
d_a = 5.6 mm
D_a = 250 mm
N = 135
L_c = 3.3 m
L_a = 4.1 m
conductor = copper
sheath = lead
mu_real = 300
mu_imag = 200
lay = contralay

[operating]
frequency = 50 Hz
temperature = 20 degC
current = 975 A
)"},
      {"275kV", R"(# Three-core armored cable, 275 kV, copper conductors, lead sheaths.
[cable]
id = 275kV
voltage = 275 kV
rated_current = 1100 A
d_c = 54.5 mm
d_s = 121.5 mm
t_s = 3 mm
c = 72.75 mm
d_a = 5.6 mm
D_a = 290 mm
N = 157
L_c = 3.8 m
L_a = 4.8 m
conductor = copper
sheath = lead
mu_real = 300
mu_imag = 200
lay = contralay

[operating]
frequency = 50 Hz
temperature = 20 degC
current = 1100 A
)"},
  };
  return t;
}

const std::vector<std::string> kOrder = {"30kV", "115kV", "132kV", "150kV", "220kV", "275kV"};

}  // namespace

std::vector<std::string> template_names() { return kOrder; }

std::string template_text(const std::string& name) {
  auto it = templates().find(name);
  if (it == templates().end()) {
    std::string known;
    for (const auto& n : kOrder) known += (known.empty() ? "" : ", ") + n;
    throw Error(ErrorCode::invalid_argument,
                "unknown template '" + name + "' (available: " + known + ")", "template");
  }
  return it->second;
}

CableFile load_template(const std::string& name) {
  return parse_cable_text(template_text(name), "template:" + name, name);
}

CableFile load_input(const std::string& input) {
  constexpr std::string_view prefix = "template:";
  if (input.rfind(prefix, 0) == 0) return load_template(input.substr(prefix.size()));
  return load_cable_file(input);
}

}  // namespace cableloss::bench
