#include "fracineq/coeffs.hpp"

#include <cmath>
#include <stdexcept>

#include "fracineq/specfun.hpp"

namespace fracineq::coeffs {
namespace {

void check_domain(double alpha, double lambda, const char* fn) {
  if (!(alpha > 0)) throw std::invalid_argument(std::string(fn) + ": alpha must be positive");
  if (!(lambda >= 0 && lambda <= 1))
    throw std::invalid_argument(std::string(fn) + ": lambda must lie in [0, 1]");
}

void check_s(double s, const char* fn) {
  if (!(s > 0 && s <= 1))
    throw std::invalid_argument(std::string(fn) + ": s must lie in (0, 1]");
}

}  // namespace

double kink(double alpha, double lambda) {
  check_domain(alpha, lambda, "kink");
  if (lambda == 0.0) return 0.0;
  return std::exp(std::log(lambda) / alpha);
}

double a1(double alpha, double lambda) {
  check_domain(alpha, lambda, "a1");
  return (2.0 * alpha * std::pow(lambda, 1.0 + 1.0 / alpha) + 1.0) / (alpha + 1.0) - lambda;
}

double a2_s(double alpha, double lambda, double s) {
  check_domain(alpha, lambda, "a2_s");
  check_s(s, "a2_s");
  return (2.0 * alpha * std::pow(lambda, 1.0 + (s + 1.0) / alpha) + s + 1.0) /
             ((s + 1.0) * (alpha + s + 1.0)) -
         lambda / (s + 1.0);
}

double a3_s(double alpha, double lambda, double s) {
  check_domain(alpha, lambda, "a3_s");
  check_s(s, "a3_s");
  const double c = kink(alpha, lambda);
  const double head = lambda * (1.0 - 2.0 * std::pow(1.0 - c, s + 1.0)) / (s + 1.0);
  return head + specfun::beta(alpha + 1.0, s + 1.0) -
         2.0 * specfun::incomplete_beta(c, alpha + 1.0, s + 1.0);
}

double a2_m(double alpha, double lambda) {
  check_domain(alpha, lambda, "a2_m");
  return (alpha * std::pow(lambda, 1.0 + 2.0 / alpha) + 1.0) / (alpha + 2.0) - lambda / 2.0;
}

double a3_m(double alpha, double lambda) {
  check_domain(alpha, lambda, "a3_m");
  return a1(alpha, lambda) - a2_m(alpha, lambda);
}

double oracle_moment(double alpha, double lambda, Weight weight, double s, double tol) {
  check_domain(alpha, lambda, "oracle_moment");
  if (weight != Weight::one) check_s(s, "oracle_moment");
  quad::QuadConfig cfg;
  cfg.tol = tol;
  cfg.max_doublings = 6;
  auto w = [&](double t) {
    switch (weight) {
      case Weight::one:
        return 1.0;
      case Weight::pow_t:
        return std::pow(t, s);
      case Weight::pow_one_minus_t:
        return std::pow(1.0 - t, s);
    }
    return 0.0;
  };
  const double c = kink(alpha, lambda);
  double acc = 0;
  if (c > 0.0) {
    auto below = [&](double t) { return (lambda - std::pow(t, alpha)) * w(t); };
    acc += quad::integrate_to_tol(below, 0.0, c, cfg, quad::Grade::both);
  }
  if (c < 1.0) {
    auto above = [&](double t) { return (std::pow(t, alpha) - lambda) * w(t); };
    acc += quad::integrate_to_tol(above, c, 1.0, cfg, quad::Grade::both);
  }
  return acc;
}

}  // namespace fracineq::coeffs
