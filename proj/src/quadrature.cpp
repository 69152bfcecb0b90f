#include "fracineq/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

namespace fracineq::quad {
namespace {

std::pair<std::vector<double>, std::vector<double>> compute_gl(int n) {
  std::vector<double> xs(n), ws(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n(x) = 0.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * k + 1) * x * p1 - k * p2) / (k + 1);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) {
        // One polishing step, then stop.
        p0 = 1.0;
        p1 = 0.0;
        for (int k = 0; k < n; ++k) {
          double p2 = p1;
          p1 = p0;
          p0 = ((2 * k + 1) * x * p1 - k * p2) / (k + 1);
        }
        pp = n * (x * p0 - p1) / (x * x - 1.0);
        x -= p0 / pp;
        break;
      }
    }
    xs[i] = -x;
    xs[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    ws[i] = w;
    ws[n - 1 - i] = w;
  }
  return {std::move(xs), std::move(ws)};
}

double panel_sum(const Fn& f, double lo, double hi,
                 const std::vector<double>& xs, const std::vector<double>& ws) {
  const double mid = 0.5 * (lo + hi), halfw = 0.5 * (hi - lo);
  double acc = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) acc += ws[i] * f(mid + halfw * xs[i]);
  return acc * halfw;
}

// Breakpoints of `per_side` panels on [lo, hi] whose widths shrink
// geometrically toward `lo` by factor `ratio`: the leftmost panel is
// [lo, lo + (hi-lo)*ratio^(per_side-1)].
void graded_breaks_toward_lo(double lo, double hi, int per_side, double ratio,
                             std::vector<double>& out) {
  out.push_back(lo);
  double scale = 1.0;
  std::vector<double> fracs;  // interior break fractions, descending from 1
  for (int k = 1; k < per_side; ++k) {
    scale *= ratio;
    fracs.push_back(scale);
  }
  for (auto it = fracs.rbegin(); it != fracs.rend(); ++it)
    out.push_back(lo + (hi - lo) * *it);
  out.push_back(hi);
}

std::vector<double> breakpoints(double lo, double hi, Grade grade, int per_side,
                                double ratio) {
  std::vector<double> bp;
  switch (grade) {
    case Grade::none: {
      bp.push_back(lo);
      for (int k = 1; k < per_side; ++k) bp.push_back(lo + (hi - lo) * k / per_side);
      bp.push_back(hi);
      break;
    }
    case Grade::toward_lo:
      graded_breaks_toward_lo(lo, hi, per_side, ratio, bp);
      break;
    case Grade::toward_hi: {
      std::vector<double> rev;
      graded_breaks_toward_lo(0.0, 1.0, per_side, ratio, rev);
      bp.reserve(rev.size());
      for (auto it = rev.rbegin(); it != rev.rend(); ++it) bp.push_back(hi - (hi - lo) * *it);
      break;
    }
    case Grade::both: {
      const double mid = 0.5 * (lo + hi);
      graded_breaks_toward_lo(lo, mid, per_side, ratio, bp);
      std::vector<double> rev;
      graded_breaks_toward_lo(0.0, 1.0, per_side, ratio, rev);
      for (auto it = std::next(rev.rbegin()); it != rev.rend(); ++it)
        bp.push_back(hi - (hi - mid) * *it);
      break;
    }
  }
  return bp;
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
  if (n < 2 || n > 256)
    throw std::invalid_argument("gauss_legendre: node count must be in [2, 256]");
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
  return it->second;
}

double integrate(const Fn& f, double lo, double hi, const QuadConfig& cfg,
                 Grade grade, int panels_per_side) {
  if (!(lo <= hi)) throw std::invalid_argument("integrate: lo <= hi required");
  if (lo == hi) return 0.0;
  if (panels_per_side < 1) throw std::invalid_argument("integrate: panels >= 1 required");
  if (!(cfg.grade > 0.0 && cfg.grade < 1.0))
    throw std::invalid_argument("integrate: grade ratio must lie in (0, 1)");
  const auto& [xs, ws] = gauss_legendre(cfg.nodes);
  const std::vector<double> bp = breakpoints(lo, hi, grade, panels_per_side, cfg.grade);
  double acc = 0;
  for (std::size_t k = 0; k + 1 < bp.size(); ++k)
    if (bp[k] < bp[k + 1]) acc += panel_sum(f, bp[k], bp[k + 1], xs, ws);
  return acc;
}

double integrate_to_tol(const Fn& f, double lo, double hi, const QuadConfig& cfg,
                        Grade grade) {
  if (lo == hi) return 0.0;
  int per_side = std::max(1, cfg.panels);
  double prev = integrate(f, lo, hi, cfg, grade, per_side);
  for (int d = 0; d < cfg.max_doublings; ++d) {
    per_side *= 2;
    double next = integrate(f, lo, hi, cfg, grade, per_side);
    if (std::fabs(next - prev) <= cfg.tol) return next;
    prev = next;
  }
  throw NumericError("integrate_to_tol: no convergence to tol=" + std::to_string(cfg.tol));
}

}  // namespace fracineq::quad
