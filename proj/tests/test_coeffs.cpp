#include "doctest.h"

#include <cmath>

#include "fracineq/coeffs.hpp"

using namespace fracineq::coeffs;

// Frozen reference values from 30-digit arithmetic for the moment integrals
// integral_0^1 |t^alpha - lambda| w(t) dt.  The closed forms must agree with
// these and with the runtime quadrature oracle.

TEST_CASE("kink location") {
  CHECK(kink(1.0, 0.25) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(kink(2.0, 0.25) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(kink(0.5, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(kink(3.0, 0.0) == 0.0);
  CHECK(kink(3.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("a1 frozen values") {
  CHECK(a1(0.5, 0.1) == doctest::Approx(0.5673333333333333).epsilon(1e-14));
  CHECK(a1(1.5, 1.0 / 3.0) == doctest::Approx(0.2589666093743211176).epsilon(1e-14));
  CHECK(a1(3.0, 0.9) == doctest::Approx(0.6534106692176001731).epsilon(1e-14));
  CHECK(a1(0.25, 0.5) == doctest::Approx(0.3125).epsilon(1e-14));
  CHECK(a1(2.0, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(a1(1.0, 1.0 / 3.0) == doctest::Approx(5.0 / 18.0).epsilon(1e-14));
  // Endpoint weights: lambda = 0 gives the plain moment 1/(alpha+1).
  CHECK(a1(2.5, 0.0) == doctest::Approx(1.0 / 3.5).epsilon(1e-14));
}

TEST_CASE("a2_s frozen values") {
  CHECK(a2_s(0.5, 0.1, 0.75) == doctest::Approx(0.3873096184829464594).epsilon(1e-14));
  CHECK(a2_s(1.5, 1.0 / 3.0, 0.5) == doctest::Approx(0.1851851851851851852).epsilon(1e-14));
  CHECK(a2_s(3.0, 0.9, 0.25) == doctest::Approx(0.4881067371166863323).epsilon(1e-14));
  CHECK(a2_s(0.25, 0.5, 1.0) == doctest::Approx(0.1946614583333333333).epsilon(1e-14));
  CHECK(a2_s(2.0, 1.0, 0.5) == doctest::Approx(0.3809523809523809524).epsilon(1e-14));
  CHECK(a2_s(1.0, 1.0 / 3.0, 1.0) == doctest::Approx(29.0 / 162.0).epsilon(1e-14));
}

TEST_CASE("a3_s frozen values") {
  CHECK(a3_s(0.5, 0.1, 0.75) == doctest::Approx(0.26302637122493213718).epsilon(1e-13));
  CHECK(a3_s(1.5, 1.0 / 3.0, 0.5) == doctest::Approx(0.1486967974761403335).epsilon(1e-13));
  CHECK(a3_s(3.0, 0.9, 0.25) == doctest::Approx(0.5665939866583249103).epsilon(1e-13));
  CHECK(a3_s(0.25, 0.5, 1.0) == doctest::Approx(0.1178385416666666667).epsilon(1e-13));
  CHECK(a3_s(2.0, 1.0, 0.5) == doctest::Approx(18.0 / 35.0).epsilon(1e-13));
  CHECK(a3_s(1.0, 0.0, 1.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("a2_m / a3_m frozen values and the decomposition") {
  CHECK(a2_m(0.5, 0.1) == doctest::Approx(0.350002).epsilon(1e-14));
  CHECK(a2_m(1.5, 1.0 / 3.0) == doctest::Approx(0.1520648225881254621).epsilon(1e-14));
  CHECK(a2_m(3.0, 0.9) == doctest::Approx(0.2533716659645251364).epsilon(1e-14));
  CHECK(a2_m(0.25, 0.5) == doctest::Approx(0.1946614583333333333).epsilon(1e-14));
  CHECK(a2_m(2.0, 1.0) == doctest::Approx(0.25).epsilon(1e-14));
  for (double alpha : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0})
    for (double lambda : {0.0, 0.1, 1.0 / 3.0, 0.5, 0.9, 1.0}) {
      CAPTURE(alpha);
      CAPTURE(lambda);
      CHECK(a2_m(alpha, lambda) + a3_m(alpha, lambda) ==
            doctest::Approx(a1(alpha, lambda)).epsilon(1e-14));
      CHECK(a2_s(alpha, lambda, 1.0) == doctest::Approx(a2_m(alpha, lambda)).epsilon(1e-13));
      CHECK(a3_s(alpha, lambda, 1.0) == doctest::Approx(a3_m(alpha, lambda)).epsilon(1e-13));
    }
}

TEST_CASE("closed forms match the quadrature oracle across the grid") {
  for (double alpha : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0})
    for (double lambda : {0.0, 0.1, 1.0 / 3.0, 0.5, 0.9, 1.0}) {
      CAPTURE(alpha);
      CAPTURE(lambda);
      CHECK(std::abs(a1(alpha, lambda) - oracle_moment(alpha, lambda, Weight::one)) < 1e-10);
      CHECK(std::abs(a2_m(alpha, lambda) -
                     oracle_moment(alpha, lambda, Weight::pow_t, 1.0)) < 1e-10);
      CHECK(std::abs(a3_m(alpha, lambda) -
                     oracle_moment(alpha, lambda, Weight::pow_one_minus_t, 1.0)) < 1e-10);
      for (double s : {0.25, 0.5, 0.75, 1.0}) {
        CAPTURE(s);
        CHECK(std::abs(a2_s(alpha, lambda, s) -
                       oracle_moment(alpha, lambda, Weight::pow_t, s)) < 1e-10);
        CHECK(std::abs(a3_s(alpha, lambda, s) -
                       oracle_moment(alpha, lambda, Weight::pow_one_minus_t, s)) < 1e-10);
      }
    }
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(a1(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(a1(1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(a1(1.0, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(a2_s(1.0, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(a2_s(1.0, 0.5, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(a3_s(-2.0, 0.5, 0.5), std::invalid_argument);
}
