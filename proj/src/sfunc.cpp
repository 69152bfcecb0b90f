#include "fracineq/sfunc.hpp"

#include <cmath>
#include <stdexcept>

#include "fracineq/coeffs.hpp"
#include "fracineq/fracint.hpp"
#include "fracineq/specfun.hpp"

namespace fracineq::sfunc {
namespace {

void check_m(double m) {
  if (!(m > 0 && m <= 1))
    throw std::invalid_argument("sfunc: m must lie in (0, 1]");
}

// integral_0^1 (t^alpha - lambda) g(t) dt, split at the kink of t^alpha - lambda
// for uniformity with the |.|-weighted moments; t^alpha has unbounded
// derivatives at t = 0 for fractional alpha, which the graded panels absorb.
double weighted_moment(const quad::Fn& g, double alpha, double lambda,
                       const quad::QuadConfig& cfg) {
  auto integrand = [&](double t) { return (std::pow(t, alpha) - lambda) * g(t); };
  const double c = coeffs::kink(alpha, lambda);
  double acc = 0;
  if (c > 0.0) acc += quad::integrate_to_tol(integrand, 0.0, c, cfg, quad::Grade::both);
  if (c < 1.0) acc += quad::integrate_to_tol(integrand, c, 1.0, cfg, quad::Grade::both);
  return acc;
}

}  // namespace

void validate(const SfParams& p) {
  if (!(p.a < p.b)) throw std::invalid_argument("sfunc: a < b required");
  if (!(p.a <= p.x && p.x <= p.b))
    throw std::invalid_argument("sfunc: x must lie in [a, b]");
  if (!(p.alpha > 0)) throw std::invalid_argument("sfunc: alpha must be positive");
  if (!(p.lambda >= 0 && p.lambda <= 1))
    throw std::invalid_argument("sfunc: lambda must lie in [0, 1]");
}

double sf_direct(const Fn& f, const SfParams& p, const quad::QuadConfig& cfg) {
  validate(p);
  const double wa = std::pow(p.x - p.a, p.alpha);
  const double wb = std::pow(p.b - p.x, p.alpha);
  const double span = p.b - p.a;
  const auto [j_left, j_right] = fracint::anchored_pair(f, p.alpha, p.a, p.b, p.x, cfg);
  return (1.0 - p.lambda) * ((wa + wb) / span) * f(p.x) +
         p.lambda * ((wa * f(p.a) + wb * f(p.b)) / span) -
         specfun::gamma(p.alpha + 1.0) / span * (j_left + j_right);
}

double sf_identity_rhs(const Fn& fprime, const SfParams& p, const quad::QuadConfig& cfg) {
  validate(p);
  const double span = p.b - p.a;
  double acc = 0;
  if (p.x > p.a) {
    auto g = [&](double t) { return fprime(t * p.x + (1.0 - t) * p.a); };
    acc += std::pow(p.x - p.a, p.alpha + 1.0) / span *
           weighted_moment(g, p.alpha, p.lambda, cfg);
  }
  if (p.x < p.b) {
    auto g = [&](double t) { return fprime(t * p.x + (1.0 - t) * p.b); };
    acc -= std::pow(p.b - p.x, p.alpha + 1.0) / span *
           weighted_moment(g, p.alpha, p.lambda, cfg);
  }
  return acc;
}

double sf_m_direct(const Fn& f, double m, const SfParams& p, const quad::QuadConfig& cfg) {
  check_m(m);
  validate(p);
  SfParams scaled = p;
  scaled.x = m * p.x;
  scaled.a = m * p.a;
  scaled.b = m * p.b;
  return sf_direct(f, scaled, cfg);
}

double sf_m_identity_rhs(const Fn& fprime, double m, const SfParams& p,
                         const quad::QuadConfig& cfg) {
  check_m(m);
  validate(p);
  const double span = p.b - p.a;
  const double ma = std::pow(m, p.alpha);
  double acc = 0;
  if (p.x > p.a) {
    auto g = [&](double t) { return fprime(t * m * p.x + m * (1.0 - t) * p.a); };
    acc += ma * std::pow(p.x - p.a, p.alpha + 1.0) / span *
           weighted_moment(g, p.alpha, p.lambda, cfg);
  }
  if (p.x < p.b) {
    auto g = [&](double t) { return fprime(t * m * p.x + m * (1.0 - t) * p.b); };
    acc -= ma * std::pow(p.b - p.x, p.alpha + 1.0) / span *
           weighted_moment(g, p.alpha, p.lambda, cfg);
  }
  return acc;
}

}  // namespace fracineq::sfunc
