#include "doctest.h"

#include <cmath>

#include "fracineq/fracint.hpp"
#include "fracineq/specfun.hpp"

using namespace fracineq::fracint;
namespace sf = fracineq::specfun;

namespace {

// Closed form for power integrands: with f(t) = (t - a)^beta,
//   left operator (lower limit a, at x) = Gamma(beta+1)/Gamma(beta+alpha+1) (x-a)^(beta+alpha),
// and the mirrored right-sided statement holds for f(t) = (b - t)^beta.
double power_closed(double beta_exp, double alpha, double span) {
  return sf::gamma(beta_exp + 1.0) / sf::gamma(beta_exp + alpha + 1.0) *
         std::pow(span, beta_exp + alpha);
}

}  // namespace

TEST_CASE("power-rule closed forms, left operator") {
  struct Case {
    double beta, alpha, a, x;
  };
  // Frozen reference values from 30-digit arithmetic.
  const Case cases[] = {
      {1, 0.5, 0.2, 0.9}, {2, 1.5, -1, 0.5}, {3, 2, 0.1, 2.1}, {0, 0.25, 0, 1}};
  const double frozen[] = {0.4405658804785604877, 0.7107308217696044145, 1.6,
                           1.1032626513208372574};
  int i = 0;
  for (const auto& c : cases) {
    CAPTURE(c.beta);
    CAPTURE(c.alpha);
    const auto f = [&c](double t) { return std::pow(t - c.a, c.beta); };
    const double got = left_rl(f, c.alpha, c.a, c.x);
    CHECK(got == doctest::Approx(power_closed(c.beta, c.alpha, c.x - c.a)).epsilon(1e-11));
    CHECK(got == doctest::Approx(frozen[i]).epsilon(1e-11));
    ++i;
  }
}

TEST_CASE("power-rule closed forms, right operator (mirrored)") {
  struct Case {
    double beta, alpha, x, b;
  };
  const Case cases[] = {{1, 0.5, 0.2, 0.9}, {2, 1.5, -1, 0.5}, {0, 0.25, 0, 1}};
  for (const auto& c : cases) {
    CAPTURE(c.beta);
    CAPTURE(c.alpha);
    const auto f = [&c](double t) { return std::pow(c.b - t, c.beta); };
    const double got = right_rl(f, c.alpha, c.b, c.x);
    CHECK(got == doctest::Approx(power_closed(c.beta, c.alpha, c.b - c.x)).epsilon(1e-11));
  }
}

TEST_CASE("alpha = 1 reduces to the plain integral") {
  const auto f = [](double t) { return std::exp(t); };
  CHECK(left_rl(f, 1.0, 0.0, 1.0) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
  CHECK(right_rl(f, 1.0, 1.0, 0.0) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("semigroup property J^a J^b = J^(a+b) on a power") {
  // For f = t^2 on [0, x]: inner = J^0.75 f has the closed power form, so the
  // outer operator can be applied to it exactly.
  const double a1 = 0.75, a2 = 0.5;
  const auto f = [](double t) { return t * t; };
  const auto inner = [&](double t) { return power_closed(2.0, a1, t); };
  const double composed = left_rl(inner, a2, 0.0, 0.8);
  const double direct = left_rl(f, a1 + a2, 0.0, 0.8);
  CHECK(composed == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("degenerate evaluation points give zero") {
  const auto f = [](double t) { return std::exp(t); };
  CHECK(left_rl(f, 0.7, 0.3, 0.3) == 0.0);
  CHECK(right_rl(f, 0.7, 0.3, 0.3) == 0.0);
}

TEST_CASE("validation") {
  const auto f = [](double t) { return t; };
  CHECK_THROWS_AS(left_rl(f, 0.0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(left_rl(f, -1.0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(left_rl(f, 1.0, 1, 0), std::invalid_argument);   // x < a
  CHECK_THROWS_AS(right_rl(f, 1.0, 0, 1), std::invalid_argument);  // x > b
}

TEST_CASE("RlQuery mirrors the free functions") {
  const auto f = [](double t) { return t * t; };
  RlQuery ql{Side::left, 0.5, 0.0, 1.0};
  CHECK(ql.run(f) == doctest::Approx(left_rl(f, 0.5, 0.0, 1.0)).epsilon(1e-14));
  RlQuery qr{Side::right, 0.5, 1.0, 0.25};
  CHECK(qr.run(f) == doctest::Approx(right_rl(f, 0.5, 1.0, 0.25)).epsilon(1e-14));
}

TEST_CASE("anchored_pair frozen values and degenerate anchors") {
  const auto ex = [](double t) { return std::exp(t); };
  const auto [first, second] = anchored_pair(ex, 0.5, 0.0, 1.0, 0.3);
  CHECK(first == doctest::Approx(0.6858266188675462560).epsilon(1e-11));
  CHECK(second == doctest::Approx(2.0748004480262163766).epsilon(1e-11));

  const auto sq = [](double t) { return t * t; };
  const auto [f1, s1] = anchored_pair(sq, 1.0, 0.0, 1.0, 0.5);
  CHECK(f1 == doctest::Approx(1.0 / 24.0).epsilon(1e-12));
  CHECK(s1 == doctest::Approx(7.0 / 24.0).epsilon(1e-12));

  const auto [fa, sa] = anchored_pair(sq, 0.75, 0.0, 1.0, 0.0);
  CHECK(fa == 0.0);
  CHECK(sa > 0.0);
  const auto [fb, sb] = anchored_pair(sq, 0.75, 0.0, 1.0, 1.0);
  CHECK(sb == 0.0);
  CHECK(fb > 0.0);
}

TEST_CASE("small alpha boundary layers stay accurate") {
  // alpha = 0.05 concentrates the transformed integrand near u = 1; the
  // graded panels must still resolve it.  Reference: power rule with beta=1.
  const auto f = [](double t) { return t; };
  const double got = left_rl(f, 0.05, 0.0, 1.0);
  CHECK(got == doctest::Approx(power_closed(1.0, 0.05, 1.0)).epsilon(1e-10));
}
