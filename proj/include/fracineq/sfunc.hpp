// The deviation operator S_f and its derivative-side integral identity.
//
// For f on [a, b], an interior anchor x, weights lambda in [0, 1] and
// alpha > 0:
//
//   S_f(x, lambda, alpha, a, b) =
//       (1 - lambda) [((x-a)^alpha + (b-x)^alpha) / (b-a)] f(x)
//     + lambda [((x-a)^alpha f(a) + (b-x)^alpha f(b)) / (b-a)]
//     - (Gamma(alpha+1) / (b-a)) [ integral_a^x (t-a)^(alpha-1) f(t) dt
//                                + integral_x^b (b-t)^(alpha-1) f(t) dt ] / Gamma(alpha)
//
// (the bracketed pair is fracint::anchored_pair).  The identity expresses the
// same quantity through f':
//
//   S_f = ((x-a)^(alpha+1) / (b-a)) integral_0^1 (t^alpha - lambda) f'(t x + (1-t) a) dt
//       + ((b-x)^(alpha+1) / (b-a)) integral_0^1 (lambda - t^alpha) f'(t x + (1-t) b) dt
//
// sf_direct / sf_identity_rhs evaluate the two routes independently; the
// verification pipeline treats their disagreement as a numerical fault, never
// as a counterexample.  The *_m_* variants evaluate the scaled-interval form:
// sf_m_direct(f, m, {x, lambda, alpha, a, b}) == S_f(m x, lambda, alpha, m a, m b),
// whose identity carries the weight m^alpha (x-a)^(alpha+1) and derivative
// arguments t m x + m (1-t) a.

#pragma once

#include <functional>

#include "fracineq/quadrature.hpp"

namespace fracineq::sfunc {

using Fn = std::function<double(double)>;

struct SfParams {
  double x = 0.5;
  double lambda = 0;
  double alpha = 1;
  double a = 0;
  double b = 1;
};

// Validates a <= x <= b, a < b, alpha > 0, lambda in [0, 1]; throws
// std::invalid_argument otherwise.
void validate(const SfParams& p);

double sf_direct(const Fn& f, const SfParams& p,
                 const quad::QuadConfig& cfg = quad::QuadConfig{});

double sf_identity_rhs(const Fn& fprime, const SfParams& p,
                       const quad::QuadConfig& cfg = quad::QuadConfig{});

// m in (0, 1]; f (resp. fprime) is evaluated on the scaled interval [ma, mb].
double sf_m_direct(const Fn& f, double m, const SfParams& p,
                   const quad::QuadConfig& cfg = quad::QuadConfig{});

double sf_m_identity_rhs(const Fn& fprime, double m, const SfParams& p,
                         const quad::QuadConfig& cfg = quad::QuadConfig{});

}  // namespace fracineq::sfunc
