#include "fracineq/fracint.hpp"

#include <cmath>
#include <stdexcept>

#include "fracineq/specfun.hpp"

namespace fracineq::fracint {
namespace {

void check_args(double alpha, double lo, double hi, const char* fn) {
  if (!(alpha > 0)) throw std::invalid_argument(std::string(fn) + ": alpha must be positive");
  if (!(lo <= hi)) throw std::invalid_argument(std::string(fn) + ": evaluation point outside range");
}

// Shared core: ((span)^alpha / Gamma(alpha+1)) integral_0^1 g(u^(1/alpha)) du
// where g(v) = f(origin + dir * span * v).  Grade::both covers the u=0 kink
// (alpha > 1) and the u=1 boundary layer (alpha < 1) at once.
double transformed(const Fn& f, double alpha, double origin, double signed_span,
                   const quad::QuadConfig& cfg) {
  const double span = std::fabs(signed_span);
  if (span == 0.0) return 0.0;
  const double inv_alpha = 1.0 / alpha;
  auto integrand = [&](double u) {
    return f(origin + signed_span * std::pow(u, inv_alpha));
  };
  const double base = quad::integrate_to_tol(integrand, 0.0, 1.0, cfg, quad::Grade::both);
  return std::pow(span, alpha) / specfun::gamma(alpha + 1.0) * base;
}

}  // namespace

double left_rl(const Fn& f, double alpha, double a, double x,
               const quad::QuadConfig& cfg) {
  check_args(alpha, a, x, "left_rl");
  // t = x - (x-a) u^(1/alpha) sweeps t from x down to a.
  return transformed(f, alpha, x, -(x - a), cfg);
}

double right_rl(const Fn& f, double alpha, double b, double x,
                const quad::QuadConfig& cfg) {
  check_args(alpha, x, b, "right_rl");
  // t = x + (b-x) u^(1/alpha) sweeps t from x up to b.
  return transformed(f, alpha, x, b - x, cfg);
}

std::pair<double, double> anchored_pair(const Fn& f, double alpha, double a,
                                        double b, double x,
                                        const quad::QuadConfig& cfg) {
  if (!(a <= x && x <= b))
    throw std::invalid_argument("anchored_pair: x must lie in [a, b]");
  // integral_a^x (t-a)^(alpha-1) f(t) dt / Gamma(alpha): right-sided anchored
  // at x, evaluated at a.
  const double first = right_rl(f, alpha, /*b=*/x, /*x=*/a, cfg);
  // integral_x^b (b-t)^(alpha-1) f(t) dt / Gamma(alpha): left-sided anchored
  // at x, evaluated at b.
  const double second = left_rl(f, alpha, /*a=*/x, /*x=*/b, cfg);
  return {first, second};
}

}  // namespace fracineq::fracint
