#include "doctest.h"

#include <cmath>

#include "fracineq/convexity.hpp"
#include "fracineq/expr.hpp"

using namespace fracineq::convexity;

namespace {
const Interval kUnit{0, 1};
}

TEST_CASE("convex specimens pass; a strictly concave one fails with a witness") {
  CHECK(check_convex([](double t) { return t * t; }, kUnit).pass);
  CHECK(check_convex([](double t) { return std::exp(t); }, {-1, 1}).pass);
  CHECK(check_convex([](double t) { return std::abs(t - 0.3); }, kUnit).pass);

  const auto bad = check_convex([](double t) { return -t * t; }, kUnit);
  REQUIRE_FALSE(bad.pass);
  REQUIRE(bad.witness.has_value());
  const auto& w = *bad.witness;
  // The reported witness must actually violate the inequality it claims to.
  const double mid = w.t * w.x + (1.0 - w.t) * w.y;
  CHECK(-mid * mid == doctest::Approx(w.lhs).epsilon(1e-12));
  CHECK(w.lhs > w.rhs + 1e-9);
  CHECK(w.index >= 0);
}

TEST_CASE("s-convexity: powers are s-convex for their own exponent") {
  for (double s : {0.25, 0.5, 0.75, 1.0}) {
    CAPTURE(s);
    CHECK(check_s_convex([s](double t) { return std::pow(t, s); }, {0.1, 1}, s).pass);
  }
  // x^s with s < 1 is NOT ordinarily convex; the s = 1 check must refuse it.
  CHECK_FALSE(check_s_convex([](double t) { return std::pow(t, 0.5); }, {0.1, 1}, 1.0).pass);
  // Nonnegative convex functions are s-convex for every s in (0, 1].
  for (double s : {0.25, 0.75, 1.0}) {
    CAPTURE(s);
    CHECK(check_s_convex([](double t) { return std::exp(t); }, kUnit, s).pass);
    CHECK(check_s_convex([](double t) { return t * t; }, kUnit, s).pass);
  }
  CHECK_THROWS_AS(check_s_convex([](double t) { return t * t; }, {-1, 1}, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_s_convex([](double t) { return t * t; }, kUnit, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_s_convex([](double t) { return t * t; }, kUnit, 1.5),
                  std::invalid_argument);
}

TEST_CASE("m-convexity") {
  // Convex with f(0) = 0 is m-convex for every m.
  for (double m : {0.25, 0.5, 1.0}) {
    CAPTURE(m);
    CHECK(check_m_convex([](double t) { return t * t; }, kUnit, m).pass);
    CHECK(check_m_convex([](double t) { return t * t * t; }, kUnit, m).pass);
  }
  // exp has f(0) = 1 > 0 and fails for m < 1 but passes at m = 1.
  CHECK(check_m_convex([](double t) { return std::exp(t); }, kUnit, 1.0).pass);
  CHECK_FALSE(check_m_convex([](double t) { return std::exp(t); }, kUnit, 0.5).pass);
  // Domain must start at 0.
  CHECK_THROWS_AS(check_m_convex([](double t) { return t; }, {0.1, 1}, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_m_convex([](double t) { return t; }, kUnit, 0.0),
                  std::invalid_argument);
}

TEST_CASE("quasi-convexity accepts monotone and rejects interior bumps") {
  CHECK(check_quasi_convex([](double t) { return std::log(1.0 + t); }, kUnit).pass);
  CHECK(check_quasi_convex([](double t) { return -2.0 * t; }, kUnit).pass);
  CHECK(check_quasi_convex([](double t) { return t * t; }, {-1, 1}).pass);
  // An interior maximum violates quasi-convexity.
  const auto bump = check_quasi_convex([](double t) { return t * (1.0 - t); }, kUnit);
  CHECK_FALSE(bump.pass);
}

TEST_CASE("verdicts are identical across serial and parallel execution") {
  SampleConfig sc;
  sc.samples = 20000;
  const auto f = [](double t) { return -(t - 0.2) * (t - 0.2); };
  const auto a = check_convex(f, kUnit, sc, Exec::serial);
  const auto b = check_convex(f, kUnit, sc, Exec::parallel);
  REQUIRE_FALSE(a.pass);
  REQUIRE_FALSE(b.pass);
  // Same minimal violating index, hence bit-identical witnesses.
  CHECK(a.witness->index == b.witness->index);
  CHECK(a.witness->x == b.witness->x);
  CHECK(a.witness->y == b.witness->y);
  CHECK(a.witness->t == b.witness->t);
  CHECK(a.witness->lhs == b.witness->lhs);
  CHECK(a.witness->rhs == b.witness->rhs);

  const auto pa = check_s_convex([](double t) { return std::exp(t); }, kUnit, 0.5, sc, Exec::serial);
  const auto pb =
      check_s_convex([](double t) { return std::exp(t); }, kUnit, 0.5, sc, Exec::parallel);
  CHECK(pa.pass);
  CHECK(pb.pass);
  CHECK(pa.samples_checked == pb.samples_checked);
}

TEST_CASE("seed changes the stream but not sound verdicts") {
  SampleConfig s1, s2;
  s2.seed = 0xfeedbeef;
  const auto f = [](double t) { return t * t; };
  CHECK(check_convex(f, kUnit, s1).pass);
  CHECK(check_convex(f, kUnit, s2).pass);
}

TEST_CASE("check_declared dispatches on the class kind") {
  const auto sq = [](double t) { return t * t; };
  CHECK(check_declared(sq, kUnit, {ClassKind::convex, 1.0}).pass);
  CHECK(check_declared(sq, kUnit, {ClassKind::s_convex, 0.5}).pass);
  CHECK(check_declared(sq, kUnit, {ClassKind::m_convex, 0.5}).pass);
  CHECK(check_declared(sq, kUnit, {ClassKind::quasi_convex, 1.0}).pass);
  const auto neg = [](double t) { return -t * t; };
  CHECK_FALSE(check_declared(neg, kUnit, {ClassKind::convex, 1.0}).pass);
}

TEST_CASE("catalog entries are self-consistent") {
  const auto& cat = catalog();
  REQUIRE(cat.size() >= 8);
  bool saw_negcontrol = false;
  for (const auto& fs : cat) {
    CAPTURE(fs.name);
    CHECK_FALSE(fs.name.empty());
    // Claimed derivative agrees with finite differences.
    const auto dr = fracineq::expr::check_derivative_consistency(fs.f, fs.fprime, fs.domain.lo,
                                                                 fs.domain.hi);
    CHECK(dr.ok);
    // Every declared class passes its own checker.
    const auto f = [&fs](double t) { return fs.fval(t); };
    SampleConfig sc;
    sc.samples = 4000;
    for (const auto& dc : fs.classes) CHECK(check_declared(f, fs.domain, dc, sc).pass);
    if (fs.name == "negcontrol") {
      saw_negcontrol = true;
      CHECK(fs.classes.empty());
      CHECK_FALSE(check_convex(f, fs.domain, sc).pass);
    }
  }
  CHECK(saw_negcontrol);
}

TEST_CASE("make_function_spec validation") {
  CHECK_THROWS_AS(make_function_spec("", "x", "1", kUnit), std::invalid_argument);
  CHECK_THROWS_AS(make_function_spec("bad", "x +", "1", kUnit), fracineq::expr::ParseError);
  CHECK_THROWS_AS(make_function_spec("inv", "x", "1", {1, 0}), std::invalid_argument);
  const auto fs = make_function_spec("ok", "x^2", "2*x", kUnit, {{ClassKind::convex, 1.0}}, 2.0);
  CHECK(fs.fval(0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(fs.dval(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  REQUIRE(fs.sup_deriv.has_value());
  CHECK(*fs.sup_deriv == 2.0);
}
