// Timing comparison between the serial reference path and the OpenMP path
// for the two hot loops: the sampled convexity scan and a sweep run.
//
// Usage: fracineq_bench [samples] [reps]
//   samples  per convexity scan (default 200000)
//   reps     timed repetitions, best-of reported (default 3)
//
// On a single-core host the parallel path is expected to tie or lose
// slightly; the point of the target is to make the comparison one command.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "fracineq/convexity.hpp"
#include "fracineq/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using fracineq::convexity::Exec;

template <typename F>
double best_of(int reps, F&& work) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    work();
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

void report(const char* name, double serial_s, double parallel_s) {
  std::printf("%-18s serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n", name,
              serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
  const long long samples = argc > 1 ? std::atoll(argv[1]) : 200000;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  if (samples < 1 || reps < 1) {
    std::fprintf(stderr, "usage: fracineq_bench [samples >= 1] [reps >= 1]\n");
    return 1;
  }
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run the serial code\n");
#endif

  // Hot loop 1: sampled s-convexity scan of e^x on [0, 1].
  fracineq::convexity::SampleConfig sc;
  sc.samples = samples;
  const auto eg = [](double t) { return std::exp(t); };
  const fracineq::convexity::Interval dom{0, 1};
  long long sink = 0;  // printed at the end so the timed work stays observable
  auto scan = [&](Exec exec) {
    const auto v = fracineq::convexity::check_s_convex(eg, dom, 0.5, sc, exec);
    sink += v.samples_checked;
  };
  const double scan_serial = best_of(reps, [&] { scan(Exec::serial); });
  const double scan_parallel = best_of(reps, [&] { scan(Exec::parallel); });
  report("convexity scan", scan_serial, scan_parallel);

  // Hot loop 2: a compact sweep (quadrature-bound, deduplicated lhs work).
  fracineq::harness::SweepConfig cfg;
  cfg.samples = 2000;
  cfg.functions = {"exp", "square", "cube"};
  cfg.alpha = {0.5, 1.0, 2.5};
  cfg.lambda = {0.0, 1.0 / 3.0, 1.0};
  cfg.x_frac = {0.25, 0.5, 0.75};
  auto sweep = [&](Exec exec) {
    const auto res = fracineq::harness::run(cfg, exec);
    sink += static_cast<long long>(res.rows.size());
  };
  const double sweep_serial = best_of(reps, [&] { sweep(Exec::serial); });
  const double sweep_parallel = best_of(reps, [&] { sweep(Exec::parallel); });
  report("sweep", sweep_serial, sweep_parallel);

  std::printf("checksum %lld\n", sink);
  return 0;
}
