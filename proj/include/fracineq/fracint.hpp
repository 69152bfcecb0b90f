// Riemann-Liouville fractional integrals of a scalar function.
//
// The weakly singular kernel is removed exactly before any quadrature: with
// the substitution t = x - (x-a) u^(1/alpha),
//
//   J_left(alpha, a, x) = (1/Gamma(alpha)) integral_a^x (x-t)^(alpha-1) f(t) dt
//                       = ((x-a)^alpha / Gamma(alpha+1)) integral_0^1
//                           f(x - (x-a) u^(1/alpha)) du
//
// and symmetrically for the right-sided operator.  The remaining integrand is
// bounded; adaptive graded Gauss-Legendre (quadrature.hpp) resolves its
// endpoint behaviour (a u^(1/alpha) kink at u=0 for alpha > 1, a boundary
// layer at u=1 for small alpha).

#pragma once

#include <functional>
#include <utility>

#include "fracineq/quadrature.hpp"

namespace fracineq::fracint {

using Fn = std::function<double(double)>;

enum class Side { left, right };

// Left-sided operator with lower limit a, evaluated at x >= a:
//   (1/Gamma(alpha)) integral_a^x (x-t)^(alpha-1) f(t) dt.
// Requires alpha > 0 and a <= x; returns 0 when x == a.
double left_rl(const Fn& f, double alpha, double a, double x,
               const quad::QuadConfig& cfg = quad::QuadConfig{});

// Right-sided operator with upper limit b, evaluated at x <= b:
//   (1/Gamma(alpha)) integral_x^b (t-x)^(alpha-1) f(t) dt.
// Requires alpha > 0 and x <= b; returns 0 when x == b.
double right_rl(const Fn& f, double alpha, double b, double x,
                const quad::QuadConfig& cfg = quad::QuadConfig{});

// One query against either operator; a small aggregate mirroring the CLI and
// report vocabulary.  `anchor` is the fixed limit (a for Side::left, b for
// Side::right) and `at` the evaluation point.
struct RlQuery {
  Side side = Side::left;
  double alpha = 1;
  double anchor = 0;
  double at = 1;

  double run(const Fn& f, const quad::QuadConfig& cfg = quad::QuadConfig{}) const {
    return side == Side::left ? left_rl(f, alpha, anchor, at, cfg)
                              : right_rl(f, alpha, anchor, at, cfg);
  }
};

// The two integrals appearing in the midpoint-anchored identities, for an
// interior point x of [a, b]:
//   first  = (1/Gamma(alpha)) integral_a^x (t-a)^(alpha-1) f(t) dt
//   second = (1/Gamma(alpha)) integral_x^b (b-t)^(alpha-1) f(t) dt.
// These are the right-sided operator anchored at x evaluated at a, and the
// left-sided operator anchored at x evaluated at b; the degenerate member is
// 0 when x == a or x == b.  Requires alpha > 0 and a <= x <= b.
std::pair<double, double> anchored_pair(const Fn& f, double alpha, double a,
                                        double b, double x,
                                        const quad::QuadConfig& cfg = quad::QuadConfig{});

}  // namespace fracineq::fracint
