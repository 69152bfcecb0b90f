#include "doctest.h"

#include <cmath>

#include "fracineq/sfunc.hpp"

using namespace fracineq::sfunc;

namespace {
const Fn kExp = [](double t) { return std::exp(t); };
const Fn kSquare = [](double t) { return t * t; };
const Fn kDSquare = [](double t) { return 2.0 * t; };
const Fn kCube = [](double t) { return t * t * t; };
const Fn kDCube = [](double t) { return 3.0 * t * t; };
}  // namespace

TEST_CASE("classical alpha=1 anchor: midpoint minus mean") {
  // f = t^2 on [0,1], x = 1/2, lambda = 0, alpha = 1:
  //   S_f = f(1/2) - integral_0^1 f = 1/4 - 1/3 = -1/12.
  SfParams p{0.5, 0.0, 1.0, 0.0, 1.0};
  CHECK(sf_direct(kSquare, p) == doctest::Approx(-1.0 / 12.0).epsilon(1e-12));
  CHECK(sf_identity_rhs(kDSquare, p) == doctest::Approx(-1.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("classical alpha=1 anchor: trapezoid minus mean") {
  // lambda = 1 weights the endpoints: S_f = 1/2 - 1/3 = 1/6.
  SfParams p{0.5, 1.0, 1.0, 0.0, 1.0};
  CHECK(sf_direct(kSquare, p) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(sf_identity_rhs(kDSquare, p) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("frozen values across alpha, lambda, anchors") {
  const Fn dexp = kExp;
  struct Case {
    SfParams p;
    const Fn *f, *fp;
    double want;
  };
  const Case cases[] = {
      {{0.3, 0.25, 0.5, 0.0, 1.0}, &kExp, &dexp, -0.3395011936670755207},
      {{0.5, 1.0 / 3.0, 1.5, 0.0, 1.0}, &kExp, &dexp, 0.01594899854019397989},
      {{0.75, 1.0, 0.5, 0.5, 1.25}, &kSquare, &kDSquare, 0.2818077596912010119},
      {{0.6, 0.9, 2.5, 0.25, 1.0}, &kCube, &kDCube, 0.06360776389998143438},
  };
  for (const auto& c : cases) {
    CAPTURE(c.p.alpha);
    CAPTURE(c.p.lambda);
    CHECK(sf_direct(*c.f, c.p) == doctest::Approx(c.want).epsilon(1e-11));
    CHECK(sf_identity_rhs(*c.fp, c.p) == doctest::Approx(c.want).epsilon(1e-11));
  }
}

TEST_CASE("scaled-interval variant: frozen value and classical anchor") {
  // S_f(mx, lambda, alpha, ma, mb) computed both ways.
  SfParams p{0.6, 0.2, 0.5, 0.1, 1.1};
  const double m = 0.75;
  CHECK(sf_m_direct(kExp, m, p) == doctest::Approx(-0.06046128940003238853).epsilon(1e-11));
  CHECK(sf_m_identity_rhs(kExp, m, p) == doctest::Approx(-0.06046128940003238853).epsilon(1e-11));

  // f = t^2, m = 1/2 on [0,1] at x = 1/2, lambda = 0, alpha = 1: the scaled
  // interval is [0, 1/2], so S = f(1/4) - 2*integral_0^{1/2} f = -1/48.
  SfParams cl{0.5, 0.0, 1.0, 0.0, 1.0};
  CHECK(sf_m_direct(kSquare, 0.5, cl) == doctest::Approx(-1.0 / 48.0).epsilon(1e-12));
  CHECK(sf_m_identity_rhs(kDSquare, 0.5, cl) == doctest::Approx(-1.0 / 48.0).epsilon(1e-12));

  // m = 1 reduces to the plain operator.
  SfParams any{0.3, 0.7, 1.25, 0.0, 1.0};
  CHECK(sf_m_direct(kExp, 1.0, any) == doctest::Approx(sf_direct(kExp, any)).epsilon(1e-13));
}

TEST_CASE("direct and identity routes agree at the interval ends") {
  for (double xf : {0.0, 1.0}) {
    SfParams p{xf, 0.4, 0.8, 0.0, 1.0};
    CAPTURE(xf);
    CHECK(sf_direct(kExp, p) == doctest::Approx(sf_identity_rhs(kExp, p)).epsilon(1e-10));
  }
}

TEST_CASE("extreme small and large alpha still match") {
  for (double alpha : {0.02, 3.0}) {
    SfParams p{0.4, 0.6, alpha, 0.0, 1.0};
    CAPTURE(alpha);
    const double d = sf_direct(kExp, p);
    const double i = sf_identity_rhs(kExp, p);
    CHECK(std::abs(d - i) / (1.0 + std::abs(d)) < 1e-9);
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(SfParams{0.5, 0.0, 0.0, 0.0, 1.0}), std::invalid_argument);  // alpha
  CHECK_THROWS_AS(validate(SfParams{0.5, -0.1, 1.0, 0.0, 1.0}), std::invalid_argument); // lambda
  CHECK_THROWS_AS(validate(SfParams{0.5, 1.1, 1.0, 0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(SfParams{2.0, 0.5, 1.0, 0.0, 1.0}), std::invalid_argument);  // x > b
  CHECK_THROWS_AS(validate(SfParams{0.5, 0.5, 1.0, 1.0, 1.0}), std::invalid_argument);  // a == b
  CHECK_THROWS_AS(sf_m_direct(kExp, 0.0, SfParams{}), std::invalid_argument);
  CHECK_THROWS_AS(sf_m_direct(kExp, 1.5, SfParams{}), std::invalid_argument);
}
