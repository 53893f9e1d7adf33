#include <doctest.h>

#include "cableloss/em_pipeline.hpp"
#include "cableloss/error.hpp"
#include "test_support.hpp"

using namespace cableloss;
using namespace cableloss::em;
using doctest::Approx;

namespace {

TestMeasurements bench30() {
  TestMeasurements m;
  m.p_m0 = 0.0;
  m.p_m1 = 0.868;
  m.i_c0 = m.i_c1 = 200;
  m.i_s0 = 8.97;
  m.i_s1 = 12.09;
  m.r_c_dc = 0.128e-3;
  m.r_s_dc = 1.194e-3;
  m.r_a_dc = 0.17e-3;
  m.theta_test = 30;
  m.y_s = 0.004999861185;
  m.y_p = 0.00232226;
  return m;
}

}  // namespace

TEST_CASE("original method on the 30 kV bench data") {
  const auto r = original_em(bench30());
  CHECK(r.delta_p_s_j == Approx(0.2353631904).epsilon(1e-10));
  CHECK(r.delta_p_s_j == Approx(0.2354).epsilon(1e-3));
  CHECK(r.p_a == Approx(0.6326368096).epsilon(1e-10));
  CHECK(r.delta_p_c_j == 0.0);
  CHECK(r.delta_p_s_ec == 0.0);
  CHECK(r.warnings.empty());
}

TEST_CASE("original method limits") {
  auto m = bench30();
  m.p_m1 = m.p_m0;
  m.i_s1 = m.i_s0;
  CHECK(original_em(m).p_a == 0.0);

  m = bench30();
  m.p_m1 = m.p_m0 = 5.0;
  const auto r = original_em(m);
  CHECK(r.p_a < 0.0);
  CHECK(has_warning(r.warnings, WarningCode::negative_armor_loss));
}

TEST_CASE("unequal conductor currents are rejected") {
  auto m = bench30();
  m.i_c1 = 210;
  for (auto run : {+[](const TestMeasurements& x) { return original_em(x); },
                   +[](const TestMeasurements& x) { return legacy_em(x, 0.01); }}) {
    try {
      run(m);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::method_assumption);
    }
  }
}

TEST_CASE("legacy method") {
  auto m = bench30();
  m.p_m1 = 0.0;
  m.i_s1 = m.i_s0;
  m.i_c0 = m.i_c1 = 0.0;
  CHECK(legacy_em(m, 0.004).p_a == 0.0);

  m = bench30();
  m.i_c0 = m.i_c1 = 0.0;
  const auto leg = legacy_em(m, 0.0);
  const auto orig = original_em(m);
  CHECK(leg.p_a == orig.p_a);
  CHECK(leg.delta_p_s_j == orig.delta_p_s_j);

  const auto spec = test::cable30();
  const auto g = derive_geometry(spec);
  const double l1pp =
      test_lambda1_doubleprime(bench30(), spec, g, iec::default_materials(spec), 50.0);
  CHECK(l1pp == Approx(0.00386608742).epsilon(1e-8));
  const auto r = legacy_em(bench30(), l1pp);
  CHECK(r.p_a == Approx(0.3022511713).epsilon(1e-8));
  REQUIRE(r.lambda1_doubleprime);
  CHECK(*r.lambda1_doubleprime == l1pp);
}

TEST_CASE("improved method on the 30 kV bench data") {
  const auto spec = test::cable30();
  const auto r = improved_em(bench30(), derive_geometry(spec), spec);
  REQUIRE(r.corrections);
  CHECK(r.corrections->y_c == Approx(0.22120700960975).epsilon(1e-12));
  CHECK(r.corrections->y_a == Approx(0.032422014318636644).epsilon(1e-12));
  CHECK(r.delta_p_s_j == Approx(0.3081575676).epsilon(1e-9));
  CHECK(r.delta_p_c_j == Approx(0.042).epsilon(1e-6));
  CHECK(r.p_a == Approx(0.518).epsilon(1e-3));
}

TEST_CASE("improved method reduces to original with neutral factors") {
  corrections::CorrectionFactors neutral;
  neutral.f_c = 1.0;
  neutral.y_c = 0.0;
  neutral.y_a = 0.0;
  for (double is1 : {0.0, 3.3, 12.09, 140.0}) {
    auto m = bench30();
    m.i_s1 = is1;
    const auto a = improved_em(m, neutral);
    const auto b = original_em(m);
    CHECK(a.p_a == b.p_a);
    CHECK(a.delta_p_s_j == b.delta_p_s_j);
    CHECK(a.delta_p_c_j == 0.0);
  }
}

TEST_CASE("improved method carries correction flags") {
  corrections::CorrectionFactors cf;
  cf.f_c = 0.9;
  cf.flags.push_back(make_warning(WarningCode::fc_below_one));
  const auto r = improved_em(bench30(), cf);
  CHECK(has_warning(r.warnings, WarningCode::fc_below_one));
}

TEST_CASE("relative error") {
  CHECK(relative_error(0.518, 0.518) == 0.0);
  CHECK(relative_error(0.518, 0.518 / 1.023) == Approx(0.023).epsilon(1e-12));
  CHECK(relative_error(0.6326368096, 0.518 / 1.023) == Approx(0.2494).epsilon(1e-3));
  CHECK_THROWS_AS(relative_error(1.0, 0.0), Error);
}

TEST_CASE("method comparison") {
  const auto spec = test::cable30();
  const auto c = compare_methods(bench30(), derive_geometry(spec), spec,
                                 iec::default_materials(spec), 50.0, 0.518 / 1.023);
  REQUIRE(c.results.size() == 3);
  CHECK(c.results[0].method == Method::original);
  CHECK(c.results[2].method == Method::improved);
  CHECK(std::abs(c.relative_errors[2]) < std::abs(c.relative_errors[0]));
}

TEST_CASE("measurement validation") {
  auto m = bench30();
  m.r_s_dc = 0.0;
  CHECK_THROWS_AS(validate(m), Error);
  m = bench30();
  m.i_s0 = -1.0;
  CHECK_THROWS_AS(validate(m), Error);
  CHECK_NOTHROW(validate(bench30()));
}

TEST_CASE("method names") {
  for (auto m : {Method::original, Method::legacy, Method::improved}) {
    CHECK(parse_method(to_string(m)) == m);
  }
  CHECK_FALSE(parse_method("fem"));
}
