// Sampled convexity-class checkers and the built-in function catalog.
//
// The checkers are falsifiers, not provers: they evaluate the defining
// inequality of each class on a deterministic low-discrepancy stream of
// (x, y, t) triples and report the first violation (smallest sample index)
// with a witness.  A passing verdict means "no violation in `samples` tries",
// which is how the verification pipeline gates theorem hypotheses.
//
// Definitions checked, for x, y in the domain and t in [0, 1]:
//   s-convex (second sense):  f(t x + (1-t) y) <= t^s f(x) + (1-t)^s f(y),
//                             s in (0, 1], domain within [0, inf)
//   m-convex:                 f(t x + m (1-t) y) <= t f(x) + m (1-t) f(y),
//                             m in (0, 1], domain of the form [0, b]
//   quasi-convex:             f(t x + (1-t) y) <= max(f(x), f(y))
//
// Both an OpenMP-parallel and a serial scan are provided; they return
// identical verdicts (the parallel scan reduces to the minimum violating
// index), and the serial one is the reference the parallel one is tested
// against.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracineq/expr.hpp"

namespace fracineq::convexity {

struct Interval {
  double lo = 0;
  double hi = 1;
};

enum class ClassKind { convex, s_convex, m_convex, quasi_convex };

struct DeclaredClass {
  ClassKind kind = ClassKind::convex;
  double param = 1.0;  // s or m; ignored for convex / quasi_convex
};

// A named function with its claimed derivative, domain, declared convexity
// classes, and (when known analytically) the sup of |f'| over the domain.
struct FunctionSpec {
  std::string name;
  std::string f_src, fprime_src;
  expr::Expr f, fprime;
  Interval domain;
  std::vector<DeclaredClass> classes;
  std::optional<double> sup_deriv;  // M in the Ostrowski-type bounds

  double fval(double t) const { return f.eval(t); }
  double dval(double t) const { return fprime.eval(t); }
};

// Parses both sources and returns the assembled spec.  Throws
// expr::ParseError on bad sources, std::invalid_argument on an empty name or
// an inverted domain.
FunctionSpec make_function_spec(std::string name, const std::string& f_src,
                                const std::string& fprime_src, Interval domain,
                                std::vector<DeclaredClass> classes = {},
                                std::optional<double> sup_deriv = std::nullopt);

// Built-in specimens: powers x, x^2, x^3 on [0,1]; exp(x) on [0,1]; the
// fractional powers x^0.25, x^0.5, x^0.75 on [0.1,1] (each s-convex for its
// own exponent); log(1+x) on [0,1] (monotone, concave, quasi-convex only);
// and "negcontrol" = -x^2 on [0,1], which declares nothing and fails the
// s = 1 check.  Every declared class passes its checker; every entry passes
// the derivative consistency check.
const std::vector<FunctionSpec>& catalog();

// Smallest-index violation of a checked inequality, with both sides.
struct Witness {
  double x = 0, y = 0, t = 0;
  double lhs = 0, rhs = 0;
  long long index = -1;
};

struct Verdict {
  bool pass = true;
  long long samples_checked = 0;
  std::optional<Witness> witness;  // set iff !pass
};

struct SampleConfig {
  std::uint64_t seed = 0x51d37a11u;  // shifts the low-discrepancy stream
  long long samples = 10000;
  double tol = 1e-9;  // slack added to the right-hand side
};

enum class Exec { serial, parallel };

using Fn1 = std::function<double(double)>;

Verdict check_s_convex(const Fn1& f, Interval dom, double s,
                       const SampleConfig& cfg = SampleConfig{},
                       Exec exec = Exec::parallel);
Verdict check_m_convex(const Fn1& f, Interval dom, double m,
                       const SampleConfig& cfg = SampleConfig{},
                       Exec exec = Exec::parallel);
Verdict check_quasi_convex(const Fn1& f, Interval dom,
                           const SampleConfig& cfg = SampleConfig{},
                           Exec exec = Exec::parallel);

// Ordinary convexity == s-convexity at s = 1 without the [0, inf) domain
// restriction.
Verdict check_convex(const Fn1& f, Interval dom,
                     const SampleConfig& cfg = SampleConfig{},
                     Exec exec = Exec::parallel);

// Runs the checker matching `dc` against f on dom (used for catalog
// self-checks and declaration-trusting pipelines).
Verdict check_declared(const Fn1& f, Interval dom, const DeclaredClass& dc,
                       const SampleConfig& cfg = SampleConfig{},
                       Exec exec = Exec::parallel);

}  // namespace fracineq::convexity
