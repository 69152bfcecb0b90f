#include "fracineq/convexity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace fracineq::convexity {
namespace {

// SplitMix64; used only to derive the Cranley-Patterson shifts from the seed.
std::uint64_t splitmix64(std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ull;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
  return v ^ (v >> 31);
}

double halton(long long i, int base) {
  double f = 1.0, r = 0.0;
  for (long long n = i; n > 0; n /= base) {
    f /= base;
    r += f * static_cast<double>(n % base);
  }
  return r;
}

struct Sampler {
  double shift[3];

  explicit Sampler(std::uint64_t seed) {
    for (int d = 0; d < 3; ++d)
      shift[d] = static_cast<double>(splitmix64(seed + d) >> 11) * 0x1.0p-53;
  }

  // Triple for sample index i (0-based): Halton bases 2, 3, 5 with a seeded
  // rotation.  Pure function of (seed, i) -- the basis of all determinism
  // guarantees downstream.
  void triple(long long i, double& u0, double& u1, double& u2) const {
    static const int kBases[3] = {2, 3, 5};
    double u[3];
    for (int d = 0; d < 3; ++d) {
      double v = halton(i + 1, kBases[d]) + shift[d];
      u[d] = v - std::floor(v);
    }
    u0 = u[0];
    u1 = u[1];
    u2 = u[2];
  }
};

// One checked inequality: fills lhs/rhs for the sample and reports violation.
// Definitions only differ in the combination point and the right-hand side.
template <typename Def>
bool violates(const Fn1& f, const Interval& dom, const Def& def,
              const Sampler& smp, double tol, long long i, Witness& w) {
  double u0, u1, u2;
  smp.triple(i, u0, u1, u2);
  const double x = dom.lo + (dom.hi - dom.lo) * u0;
  const double y = dom.lo + (dom.hi - dom.lo) * u1;
  const double t = u2;
  const double lhs = f(def.point(x, y, t));
  const double rhs = def.bound(f, x, y, t);
  if (lhs > rhs + tol) {
    w = Witness{x, y, t, lhs, rhs, i};
    return true;
  }
  return false;
}

template <typename Def>
Verdict scan(const Fn1& f, Interval dom, const Def& def, const SampleConfig& cfg,
             Exec exec) {
  if (!(dom.lo < dom.hi))
    throw std::invalid_argument("convexity check: domain must satisfy lo < hi");
  if (cfg.samples <= 0)
    throw std::invalid_argument("convexity check: sample count must be positive");
  const Sampler smp(cfg.seed);
  const long long n = cfg.samples;
  long long first = std::numeric_limits<long long>::max();
  std::string error_msg;
  long long error_at = std::numeric_limits<long long>::max();

  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : first) reduction(min : error_at)
#endif
    for (long long i = 0; i < n; ++i) {
      Witness w;
      try {
        if (violates(f, dom, def, smp, cfg.tol, i, w) && i < first) first = i;
      } catch (const std::exception&) {
        if (i < error_at) error_at = i;
      }
    }
  } else {
    for (long long i = 0; i < n; ++i) {
      Witness w;
      try {
        if (violates(f, dom, def, smp, cfg.tol, i, w)) {
          first = i;
          break;
        }
      } catch (const std::exception&) {
        error_at = i;
        break;
      }
    }
  }

  // Errors and violations are both reported at their smallest index so the
  // two execution modes agree; an error that precedes the first violation
  // wins, matching what the serial scan would have hit first.
  if (error_at < first) {
    double u0, u1, u2;
    smp.triple(error_at, u0, u1, u2);
    try {
      Witness w;
      violates(f, dom, def, smp, cfg.tol, error_at, w);
    } catch (const std::exception& e) {
      throw expr::EvalError(std::string("convexity check: evaluation failed at sample ") +
                            std::to_string(error_at) + ": " + e.what());
    }
    throw expr::EvalError("convexity check: evaluation failed at sample " +
                          std::to_string(error_at));
  }

  Verdict v;
  v.samples_checked = n;
  if (first < n) {
    Witness w;
    violates(f, dom, def, smp, cfg.tol, first, w);  // deterministic re-evaluation
    v.pass = false;
    v.witness = w;
  }
  return v;
}

struct SConvexDef {
  double s;
  double point(double x, double y, double t) const { return t * x + (1 - t) * y; }
  double bound(const Fn1& f, double x, double y, double t) const {
    return std::pow(t, s) * f(x) + std::pow(1 - t, s) * f(y);
  }
};

struct MConvexDef {
  double m;
  double point(double x, double y, double t) const { return t * x + m * (1 - t) * y; }
  double bound(const Fn1& f, double x, double y, double t) const {
    return t * f(x) + m * (1 - t) * f(y);
  }
};

struct QuasiDef {
  double point(double x, double y, double t) const { return t * x + (1 - t) * y; }
  double bound(const Fn1& f, double x, double y, double) const {
    return std::max(f(x), f(y));
  }
};

}  // namespace

Verdict check_s_convex(const Fn1& f, Interval dom, double s, const SampleConfig& cfg,
                       Exec exec) {
  if (!(s > 0 && s <= 1))
    throw std::invalid_argument("check_s_convex: s must lie in (0, 1]");
  if (dom.lo < 0)
    throw std::invalid_argument("check_s_convex: domain must lie within [0, inf)");
  return scan(f, dom, SConvexDef{s}, cfg, exec);
}

Verdict check_m_convex(const Fn1& f, Interval dom, double m, const SampleConfig& cfg,
                       Exec exec) {
  if (!(m > 0 && m <= 1))
    throw std::invalid_argument("check_m_convex: m must lie in (0, 1]");
  if (std::fabs(dom.lo) > 1e-12)
    throw std::invalid_argument("check_m_convex: domain must be of the form [0, b]");
  return scan(f, dom, MConvexDef{m}, cfg, exec);
}

Verdict check_quasi_convex(const Fn1& f, Interval dom, const SampleConfig& cfg,
                           Exec exec) {
  return scan(f, dom, QuasiDef{}, cfg, exec);
}

Verdict check_convex(const Fn1& f, Interval dom, const SampleConfig& cfg, Exec exec) {
  return scan(f, dom, SConvexDef{1.0}, cfg, exec);
}

Verdict check_declared(const Fn1& f, Interval dom, const DeclaredClass& dc,
                       const SampleConfig& cfg, Exec exec) {
  switch (dc.kind) {
    case ClassKind::convex:
      return check_convex(f, dom, cfg, exec);
    case ClassKind::s_convex:
      return check_s_convex(f, dom, dc.param, cfg, exec);
    case ClassKind::m_convex:
      return check_m_convex(f, dom, dc.param, cfg, exec);
    case ClassKind::quasi_convex:
      return check_quasi_convex(f, dom, cfg, exec);
  }
  throw std::invalid_argument("check_declared: unknown class kind");
}

}  // namespace fracineq::convexity
