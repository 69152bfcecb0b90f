// Closed-form moment coefficients used by the bound evaluators.
//
// All five are moments of the piecewise weight |t^alpha - lambda| on [0, 1],
// which has a single kink at t = lambda^(1/alpha):
//
//   a1(alpha, lambda)       = integral_0^1 |t^alpha - lambda| dt
//   a2_s(alpha, lambda, s)  = integral_0^1 |t^alpha - lambda| t^s dt
//   a3_s(alpha, lambda, s)  = integral_0^1 |t^alpha - lambda| (1-t)^s dt
//   a2_m(alpha, lambda)     = a2_s(alpha, lambda, 1)
//   a3_m(alpha, lambda)     = a3_s(alpha, lambda, 1) = a1 - a2_m
//
// a2_m / a3_m are kept as their own closed forms because the bound family
// they serve states them that way; the s = 1 reductions above are verified
// identities, not definitions, in the test suite.  oracle_moment() evaluates
// the defining integral by adaptive quadrature split at the kink and is the
// independent reference every closed form is tested against.
//
// Domain: alpha > 0, lambda in [0, 1], s in (0, 1].  Violations throw
// std::invalid_argument.

#pragma once

#include "fracineq/quadrature.hpp"

namespace fracineq::coeffs {

// lambda^(1/alpha), the kink of |t^alpha - lambda| on [0, 1].  Computed as
// exp(log(lambda)/alpha) with the lambda == 0 shortcut returning 0.
double kink(double alpha, double lambda);

double a1(double alpha, double lambda);
double a2_s(double alpha, double lambda, double s);
double a3_s(double alpha, double lambda, double s);
double a2_m(double alpha, double lambda);
double a3_m(double alpha, double lambda);

enum class Weight { one, pow_t, pow_one_minus_t };

// integral_0^1 |t^alpha - lambda| w(t) dt with w per `weight` (t^s or (1-t)^s
// use the exponent argument; Weight::one ignores it).  Adaptive graded
// quadrature split exactly at the kink; the default tolerance leaves margin
// under the 1e-10 agreement bar the closed forms are held to.
double oracle_moment(double alpha, double lambda, Weight weight, double s = 1.0,
                     double tol = 1e-13);

}  // namespace fracineq::coeffs
