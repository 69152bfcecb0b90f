// Right-hand-side evaluators for the three derivative-based bound families on
// |S_f|, their four classical specialisations, and the verification driver.
//
// Families (hypothesis is always on |f'|^q, q >= 1, not on f itself):
//   s_convex      |f'|^q s-convex in the second sense on [a, b] within [0, inf)
//   quasi_convex  |f'|^q quasi-convex on [a, b]
//   m_convex      |f'|^q m-convex, f evaluated on the scaled interval [ma, mb]
//
// With A1 = a1(alpha, lambda), A2/A3 the matching moment coefficients
// (coeffs.hpp), and K = A1^(1-1/q) (defined as exactly 1 at q = 1):
//
//   s_convex:  K * { ((x-a)^(alpha+1)/(b-a)) (|f'(x)|^q A2s + |f'(a)|^q A3s)^(1/q)
//                  + ((b-x)^(alpha+1)/(b-a)) (|f'(x)|^q A2s + |f'(b)|^q A3s)^(1/q) }
//   quasi:     A1 * { ((x-a)^(alpha+1)/(b-a)) max(|f'(x)|^q, |f'(a)|^q)^(1/q)
//                   + ((b-x)^(alpha+1)/(b-a)) max(|f'(x)|^q, |f'(b)|^q)^(1/q) }
//   m_convex:  K * { (m^alpha (x-a)^(alpha+1)/(b-a)) (|f'(mx)|^q A2m + m |f'(a)|^q A3m)^(1/q)
//                  + (m^alpha (b-x)^(alpha+1)/(b-a)) (|f'(mx)|^q A2m + m |f'(b)|^q A3m)^(1/q) }
//
// The four specialisations fix (x, lambda): simpson (midpoint x, lambda=1/3),
// midpoint (midpoint x, lambda=0), trapezoid (lambda=1, x free), ostrowski
// (lambda=0, x free, every |f'| replaced by a sup bound M).
//
// corollary_rhs_printed() codes each specialisation's *displayed* closed form
// verbatim -- including its typos -- and is compared against the specialised
// general bound; persistent mismatches surface as findings with both values
// (see harness.hpp), never as silent reconciliation.  Verification rows are
// always judged against the specialised general bound, which is the form the
// derivation supports.

#pragma once

#include <optional>
#include <string>
#include <utility>

#include "fracineq/convexity.hpp"
#include "fracineq/quadrature.hpp"
#include "fracineq/sfunc.hpp"

namespace fracineq::bounds {

enum class Family { s_convex, quasi_convex, m_convex };
enum class CorollaryId { simpson, midpoint, trapezoid, ostrowski };

const char* to_string(Family f);
const char* to_string(CorollaryId c);
std::optional<Family> family_from_string(const std::string& s);
std::optional<CorollaryId> corollary_from_string(const std::string& s);

// |f'| at the three anchor points of a bound: the interior anchor (x, or mx
// for the m-family) and the interval ends a, b.  The Ostrowski forms pass
// {M, M, M}.
struct DerivMags {
  double at_x = 0, at_a = 0, at_b = 0;
};

// q >= 1 throughout; std::invalid_argument otherwise.
double rhs_s_convex(const DerivMags& d, const sfunc::SfParams& p, double q, double s);
double rhs_quasi(const DerivMags& d, const sfunc::SfParams& p, double q);
double rhs_m_convex(const DerivMags& d, const sfunc::SfParams& p, double q, double m);

// Derivative magnitudes for `family` at the anchors of p (m-family evaluates
// the interior anchor at m * p.x).  With M set, returns {M, M, M}.
DerivMags deriv_mags(const convexity::FunctionSpec& fs, Family family,
                     const sfunc::SfParams& p, double m,
                     std::optional<double> M = std::nullopt);

// Family dispatcher over the general bounds above.
double rhs_general(Family family, const DerivMags& d, const sfunc::SfParams& p,
                   double q, double s, double m);

// Fixes (x, lambda) per corollary; other fields pass through.
sfunc::SfParams specialize(CorollaryId id, sfunc::SfParams p);

// Factor c such that the corollary's display reads |c * S_f| <= printed RHS:
// 2^(alpha-1)/(b-a)^(alpha-1) for simpson/midpoint (an extra 1/m^alpha in the
// m-family), 1 for trapezoid/ostrowski.
double display_scale(CorollaryId id, Family family, const sfunc::SfParams& p, double m);

// The corollary's displayed right-hand side, coded verbatim from its
// statement.  p must already be specialised (see specialize()); d holds the
// derivative magnitudes at the specialised anchors.  M is required for
// ostrowski and ignored elsewhere.  s and m are used by the s_convex /
// m_convex families respectively.
double corollary_rhs_printed(CorollaryId id, Family family, const DerivMags& d,
                             const sfunc::SfParams& p, double q, double s,
                             double m, std::optional<double> M);

struct BoundParams {
  sfunc::SfParams p;
  double q = 1;
  double s = 1;                // s_convex family only
  double m = 1;                // m_convex family only
  std::optional<double> M;     // sup |f'|; enables the Ostrowski forms
};

struct Tols {
  double abs = 1e-8;       // absolute slack allowed on rhs - lhs
  double rel = 1e-6;       // relative (scaled by |rhs|) slack allowed
  double residual = 1e-8;  // direct-vs-identity disagreement => fault
};

enum class CellStatus { holds, violated, skipped, fault };

const char* to_string(CellStatus s);

struct BoundReport {
  CellStatus status = CellStatus::skipped;
  double lhs = 0;       // |S_f| (direct route)
  double rhs = 0;       // general bound for the family
  double slack = 0;     // rhs - lhs
  double residual = 0;  // |direct - identity| / (1 + |direct|)
  double tol = 0;       // slack threshold actually applied
  std::string note;     // skip reason or fault description
};

// Evaluates |S_f| by both routes and the family bound, and classifies the
// cell.  Precondition: the family hypothesis for |f'|^q has already been
// gated by the convexity checkers (the verification pipeline does this);
// verify() itself only validates parameter ranges.  A route disagreement
// beyond tols.residual * (1 + |lhs|) yields CellStatus::fault, never
// "violated".
BoundReport verify(const convexity::FunctionSpec& fs, Family family,
                   const BoundParams& bp, const Tols& tols = Tols{},
                   const quad::QuadConfig& qcfg = quad::QuadConfig{});

// Both halves of the midpoint/mean/endpoint-mean comparison for a convex f:
//   first:  f((a+b)/2)      <= mean of f over [a, b]
//   second: mean over [a,b] <= (f(a) + f(b)) / 2
// The mean is computed by adaptive quadrature; slack tolerances as in Tols.
std::pair<BoundReport, BoundReport> hh_check(const convexity::FunctionSpec& fs,
                                             double a, double b,
                                             const Tols& tols = Tols{},
                                             const quad::QuadConfig& qcfg = quad::QuadConfig{});

}  // namespace fracineq::bounds
