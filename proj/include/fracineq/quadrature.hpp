// Composite Gauss-Legendre quadrature with geometrically graded panels.
//
// The integrands in this project are smooth except for algebraic behaviour
// (t^p with fractional p, or boundary layers) at one or both interval ends.
// Grading panels geometrically toward the affected end makes the composite
// rule converge geometrically in the number of panel *levels*, so the
// adaptive driver doubles the per-side panel count until two successive
// results agree to the requested tolerance.

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace fracineq::quad {

// Raised when an adaptive integration fails to reach its tolerance within the
// configured budget.  Callers in the verification pipeline treat this as a
// numerical fault, never as a counterexample.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadConfig {
  int nodes = 64;          // Gauss-Legendre points per panel (2..256)
  int panels = 8;          // initial panels per graded side (>= 1)
  double tol = 1e-11;      // absolute tolerance for the adaptive driver
  int max_doublings = 5;   // panel-count doublings before giving up
  double grade = 0.25;     // geometric ratio between adjacent panel widths
};

// Which end(s) of the interval get the geometric grading.
enum class Grade { none, toward_lo, toward_hi, both };

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], computed
// by Newton iteration on the Legendre recurrence and cached per n.
// Thread-safe.  Throws std::invalid_argument unless 2 <= n <= 256.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

using Fn = std::function<double(double)>;

// Single fixed-panel-count pass: integrates f over [lo, hi] with
// `panels_per_side` panels graded per `grade` (Grade::both splits at the
// midpoint and grades each half toward its end).  Summation order is fixed,
// so results are bit-reproducible for a given configuration.
double integrate(const Fn& f, double lo, double hi, const QuadConfig& cfg,
                 Grade grade, int panels_per_side);

// Adaptive driver: doubles panels_per_side (starting at cfg.panels) until two
// successive passes differ by at most cfg.tol, then returns the finer result.
// Throws NumericError if cfg.max_doublings doublings do not converge.
double integrate_to_tol(const Fn& f, double lo, double hi, const QuadConfig& cfg,
                        Grade grade);

}  // namespace fracineq::quad
