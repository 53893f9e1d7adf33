#include "cableloss/mesh_oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "cableloss/error.hpp"

namespace cableloss::oracle {

namespace {

constexpr double mu0_over_2pi = 2e-7;

struct Point {
  double x;
  double y;
};

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

CirculatingCurrents solve_circulating_currents(double r_s, double omega, double conductor_spacing,
                                               double sheath_mean_diameter, double i_c,
                                               double reference_radius) {
  if (!(r_s >= 0.0) || !(omega > 0.0) || !(conductor_spacing > 0.0) ||
      !(sheath_mean_diameter > 0.0) || !(reference_radius > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "oracle inputs must be positive");
  }
  const double pi = std::numbers::pi;

  // Trefoil vertices, circumradius s / sqrt(3).
  const double rc = conductor_spacing / std::sqrt(3.0);
  std::array<Point, 3> pos;
  for (int k = 0; k < 3; ++k) {
    const double a = pi / 2.0 + 2.0 * pi * k / 3.0;
    pos[k] = {rc * std::cos(a), rc * std::sin(a)};
  }

  CirculatingCurrents out;
  for (int k = 0; k < 3; ++k) {
    out.conductor[k] = std::polar(i_c, -2.0 * pi * k / 3.0);
  }

  // Flux linkage of sheath i per unit current in filament j, relative to the
  // reference radius. A current inside or on the tube links it as if located
  // at the tube radius.
  const double tube_radius = sheath_mean_diameter / 2.0;
  auto coupling = [&](int i, int j) {
    const double dist = (i == j) ? tube_radius : distance(pos[i], pos[j]);
    return mu0_over_2pi * std::log(reference_radius / dist);
  };

  // Sheath voltage drop: E_i = r_s I_si + j omega sum_j L_ij (I_cj + I_sj).
  // Both ends bonded: E_0 = E_1 = E_2, and the sheath currents sum to zero.
  Eigen::Matrix3cd z;
  Eigen::Vector3cd drive;
  const Phasor j(0.0, omega);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      z(i, k) = j * coupling(i, k) + (i == k ? Phasor(r_s, 0.0) : Phasor(0.0, 0.0));
    }
    drive(i) = 0.0;
    for (int k = 0; k < 3; ++k) drive(i) -= j * coupling(i, k) * out.conductor[k];
  }

  Eigen::Matrix3cd a;
  Eigen::Vector3cd b;
  a.row(0) = z.row(0) - z.row(1);
  a.row(1) = z.row(1) - z.row(2);
  a.row(2) = Eigen::RowVector3cd::Ones();
  b(0) = drive(0) - drive(1);
  b(1) = drive(1) - drive(2);
  b(2) = 0.0;

  Eigen::FullPivLU<Eigen::Matrix3cd> lu(a);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::degenerate_input,
                "sheath loop system is singular (zero sheath resistance and zero coupling)");
  }
  const Eigen::Vector3cd x = lu.solve(b);
  for (int k = 0; k < 3; ++k) out.sheath[k] = x(k);
  return out;
}

double oracle_lambda1(double r_s, double r_c_ac, double omega, double conductor_spacing,
                      double sheath_mean_diameter, double reference_radius) {
  if (!(r_c_ac > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "conductor AC resistance must be positive");
  }
  const auto cur = solve_circulating_currents(r_s, omega, conductor_spacing, sheath_mean_diameter,
                                              1.0, reference_radius);
  double sheath = 0.0;
  double conductor = 0.0;
  for (int k = 0; k < 3; ++k) {
    sheath += r_s * std::norm(cur.sheath[k]);
    conductor += r_c_ac * std::norm(cur.conductor[k]);
  }
  return sheath / conductor;
}

}  // namespace cableloss::oracle
