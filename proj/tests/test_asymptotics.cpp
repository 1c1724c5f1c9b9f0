#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "latpress/asymptotics.hpp"
#include "latpress/exact.hpp"

using namespace latpress;
using namespace latpress::asym;

namespace {
bool near(double x, double y, double tol = 1e-12) { return std::abs(x - y) < tol; }
}  // namespace

TEST_CASE("regime classification is exact") {
  CHECK(regime(Rational(3, 2)) == Regime::Subcritical);
  CHECK(regime(Rational(2)) == Regime::Critical);
  CHECK(regime(Rational(5, 2)) == Regime::Supercritical);
  CHECK(regime(Rational(4000000001, 2000000000)) == Regime::Supercritical);
  CHECK_THROWS_AS(regime(Rational(0)), std::domain_error);
}

TEST_CASE("limiting free energy and visit density") {
  CHECK(near(free_energy_dyck(Rational(1)), std::log(2.0)));
  CHECK(near(visit_density(Rational(1)), 0.0));
  CHECK(near(free_energy_dyck(Rational(2)), std::log(2.0)));
  CHECK(near(visit_density(Rational(2)), 0.0));
  CHECK(near(free_energy_dyck(Rational(4)), 0.83698821678583577));
  CHECK(near(visit_density(Rational(4)), 1.0 / 3.0));
}

TEST_CASE("saddle locations clamp at the critical point") {
  auto s2 = saddle_locations(Rational(2));
  CHECK((s2.delta == 0.0 && s2.alpha_m == 0.0 && s2.alpha_M == 0.0));
  auto s1 = saddle_locations(Rational(1));
  CHECK((s1.delta == 0.0 && s1.alpha_m == 0.0 && s1.alpha_M == 0.0));
  CHECK(near(saddle_locations(Rational(4)).delta, 0.25));
  CHECK(near(saddle_locations(Rational(4)).alpha_M, 0.5));
}

TEST_CASE("limiting pressure") {
  CHECK(near(limiting_pressure(Rational(3)), -std::log(2.0)));
  CHECK(near(limiting_pressure(Rational(5, 2)), -0.40546510810816438));
  CHECK(limiting_pressure(Rational(3, 2)) == 0.0);
  CHECK(limiting_pressure(Rational(2)) == 0.0);
}

TEST_CASE("rescaled residual pressure at z=1") {
  CHECK(near(rescaled_residual(ModelKind::DyckPath, 0.5), -4.5135166683820503));
  CHECK(near(rescaled_residual(ModelKind::DirectedPath, 0.5), -2.2567583341910251));
  for (double a : {0.1, 0.3, 0.45})
    CHECK(near(rescaled_residual(ModelKind::DyckPath, a),
               rescaled_residual(ModelKind::DyckPath, 1.0 - a)));
  CHECK_THROWS_AS(rescaled_residual(ModelKind::StaircasePolygon, 0.5), std::domain_error);
  CHECK_THROWS_AS(rescaled_residual(ModelKind::DyckPath, 0.0), std::domain_error);
}

TEST_CASE("subcritical path forms") {
  CHECK(near(asym_pressure(ModelKind::DirectedPath, 128, Rational(3, 2), 0.5).value,
             -0.018518646211783997));
  CHECK(near(asym_pressure(ModelKind::DyckPath, 128, Rational(3, 2), 0.5).value,
             -0.037386713663533237));
  CHECK(asym_pressure(ModelKind::DyckPath, 128, Rational(3, 2), 0.5).order_tag ==
        std::string("n^-3/2"));
  // below z = 1 the published derivation does not apply
  CHECK_THROWS_AS(asym_pressure(ModelKind::DyckPath, 128, Rational(1, 2), 0.5),
                  OutOfRegimeValidity);
  // too close to the boundary at small n the log argument flips sign
  CHECK_THROWS_AS(asym_pressure(ModelKind::DirectedPath, 4, Rational(3, 2), 0.1),
                  OutOfRegimeValidity);
}

TEST_CASE("z=1 dispatches to the pure-entropy profile") {
  auto t = asym_pressure(ModelKind::DirectedPath, 128, Rational(1), 0.5);
  CHECK(near(t.value, -0.004407731121466846));
  auto d = asym_pressure(ModelKind::DyckPath, 128, Rational(1), 0.5);
  CHECK(near(d.value, -0.008815462242933692));
  // consistent with the rescaled limit: (n/2)^{3/2} * value -> p(a)
  CHECK(near(std::pow(64.0, 1.5) * d.value, rescaled_residual(ModelKind::DyckPath, 0.5)));
}

TEST_CASE("critical forms") {
  CHECK(near(asym_pressure(ModelKind::DirectedPath, 128, Rational(2), 0.5).value,
             -0.10830822569345152));
  CHECK(near(asym_pressure(ModelKind::DyckPath, 128, Rational(2), 0.5).value,
             -0.15204153417429228));
  CHECK(near(asym_pressure(ModelKind::StaircasePolygon, 256, Rational(2), 0.5).value,
             -0.11180965216727883));
  CHECK(asym_pressure(ModelKind::DyckPath, 128, Rational(2), 0.5).order_tag ==
        std::string("n^-1/2"));
}

TEST_CASE("supercritical path forms: corrected ratio and expanded summary") {
  CHECK(near(asym_pressure(ModelKind::DirectedPath, 256, Rational(5, 2), 0.5).value,
             -0.43864474557942746));
  CHECK(near(asym_pressure(ModelKind::DyckPath, 256, Rational(5, 2), 0.5).value,
             -0.45615259239255865));
  CHECK(near(asym_pressure(ModelKind::DirectedPath, 256, Rational(5, 2), 0.5,
                           Variant::Summary)
                 .value,
             -0.76361940498316438));
  CHECK(near(asym_pressure(ModelKind::DyckPath, 256, Rational(5, 2), 0.5,
                           Variant::Summary)
                 .value,
             -0.77989544664983105));
  CHECK(asym_pressure(ModelKind::DyckPath, 256, Rational(5, 2), 0.5).order_tag ==
        std::string("n^-1"));
}

TEST_CASE("staircase forms across regimes") {
  CHECK(near(asym_pressure(ModelKind::StaircasePolygon, 256, Rational(3, 2), 0.5).value,
             -0.016667119681563384));
  CHECK(near(asym_pressure(ModelKind::StaircasePolygon, 256, Rational(3), 0.5).value,
             -0.71811575696426094));
  CHECK(near(asym_pressure(ModelKind::StaircasePolygon, 256, Rational(3), 0.5,
                           Variant::Summary)
                 .value,
             -0.64656714887018702));
  // finite at z = 1
  CHECK(asym_pressure(ModelKind::StaircasePolygon, 256, Rational(1), 0.5).value < 0.0);
}

TEST_CASE("asymptotic profile symmetry") {
  for (double a : {0.2, 0.35}) {
    CHECK(near(asym_pressure(ModelKind::DyckPath, 128, Rational(3, 2), a).value,
               asym_pressure(ModelKind::DyckPath, 128, Rational(3, 2), 1.0 - a).value));
    CHECK(near(asym_pressure(ModelKind::StaircasePolygon, 128, Rational(3), a).value,
               asym_pressure(ModelKind::StaircasePolygon, 128, Rational(3), 1.0 - a).value));
    CHECK(asym_pressure(ModelKind::DirectedPath, 128, Rational(3, 2), a).value !=
          asym_pressure(ModelKind::DirectedPath, 128, Rational(3, 2), 1.0 - a).value);
  }
}

TEST_CASE("approach to the limiting pressure is monotone for the corrected forms") {
  for (const Rational& z : {Rational(5, 2), Rational(3)}) {
    const double lim = limiting_pressure(z);
    for (ModelKind m : {ModelKind::DirectedPath, ModelKind::DyckPath,
                        ModelKind::StaircasePolygon}) {
      double prev = 1e9;
      for (unsigned n : {64u, 128u, 256u, 512u}) {
        const double gap = std::abs(asym_pressure(m, n, z, 0.5).value - lim);
        CHECK(gap < prev);
        prev = gap;
      }
    }
  }
}

TEST_CASE("scaling orders: n^{3/2} |P| and n^{1/2} |P| settle down") {
  double s1 = std::pow(512.0, 1.5) *
              std::abs(asym_pressure(ModelKind::DyckPath, 512, Rational(3, 2), 0.5).value);
  double s2 = std::pow(2048.0, 1.5) *
              std::abs(asym_pressure(ModelKind::DyckPath, 2048, Rational(3, 2), 0.5).value);
  CHECK(std::abs(s1 / s2 - 1.0) < 0.02);

  double c1 = std::sqrt(512.0) *
              std::abs(asym_pressure(ModelKind::DyckPath, 512, Rational(2), 0.5).value);
  double c2 = std::sqrt(8192.0) *
              std::abs(asym_pressure(ModelKind::DyckPath, 8192, Rational(2), 0.5).value);
  CHECK(std::abs(c1 / c2 - 1.0) < 0.05);
}

TEST_CASE("asymptotic accuracy improves with n against the exact pressure") {
  const Rational z(3, 2);
  auto gap_at = [&](unsigned n) {
    const double ex = static_cast<double>(
        exact::pressure({ModelKind::DirectedPath, n, z, n / 2}).value);
    const double as = asym_pressure(ModelKind::DirectedPath, n, z, 0.5).value;
    return std::abs(ex - as);
  };
  CHECK(gap_at(1024) < gap_at(128));
}

TEST_CASE("dyck sandwich bounds") {
  auto b14 = dyck_bounds(1, Rational(4));
  CHECK(b14.lower == Rational(32, 9));
  CHECK(exact::partition_dyck(2, Rational(4)) == 4);
  CHECK(b14.lower <= 4);
  CHECK(b14.upper >= 4);

  auto b53 = dyck_bounds(5, Rational(3));
  Rational d10 = exact::partition_dyck(10, Rational(3));
  CHECK(b53.lower <= d10);
  CHECK(d10 <= b53.upper);

  Rational prev_ratio;
  bool first = true;
  for (unsigned n = 5; n <= 20; ++n) {
    auto b = dyck_bounds(n, Rational(5, 2));
    Rational ratio = b.upper / b.lower;
    if (!first) CHECK(ratio < prev_ratio);
    prev_ratio = ratio;
    first = false;
  }

  CHECK_THROWS_AS(dyck_bounds(4, Rational(2)), std::domain_error);
  CHECK_THROWS_AS(dyck_bounds(4, Rational(3, 2)), std::domain_error);
}
