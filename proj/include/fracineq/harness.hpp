// Sweep harness: config-driven verification runs, deterministic CSV/JSON
// reports, plot data extraction, and the randomized identity / coefficient
// suites behind the CLI verbs.
//
// A run enumerates cells (function x family x bound x grid point) in a fixed
// order, gates each cell's hypothesis with the convexity checkers, evaluates
// |S_f| by the direct and the identity route (disagreement => fault, never a
// counterexample), judges the cell against the family's general bound, and
// cross-checks each corollary's printed closed form against the specialised
// general bound, reporting persistent mismatches as findings with both
// values.
//
// Determinism: for a fixed config (including seed), reports are byte
// identical across runs and across Exec::serial / Exec::parallel and any
// --jobs value.  Cells and findings are merged by enumeration index, numeric
// fields print via "%.17g", and the sample streams are pure functions of the
// seed.
//
// Exit codes (process and RunResult::exit_code):
//   0  every non-skipped cell holds
//   1  configuration error (bad JSON, unknown key/function, bad ranges)
//   2  at least one genuine violation (paths agree, bound fails)
//   3  at least one numerical fault (route disagreement or non-convergence)

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracineq/bounds.hpp"
#include "fracineq/convexity.hpp"

namespace fracineq::harness {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// How theorem hypotheses are gated: "checked" runs the sampled checkers on
// |f'|^q (the default); "declared" trusts the function's declared classes,
// which lets fault-injection fixtures reach genuinely violated cells.
enum class GateMode { checked, declared };

enum class OutFormat { csv, json, both };

struct SweepConfig {
  std::uint64_t seed = 20260814;
  long long samples = 10000;  // per convexity gate check
  std::vector<std::string> functions;  // catalog names; empty = all
  std::vector<convexity::FunctionSpec> inline_functions;
  std::vector<bounds::Family> families{bounds::Family::s_convex,
                                       bounds::Family::quasi_convex,
                                       bounds::Family::m_convex};
  bool general = true;  // include the general-bound rows
  std::vector<bounds::CorollaryId> corollaries{
      bounds::CorollaryId::simpson, bounds::CorollaryId::midpoint,
      bounds::CorollaryId::trapezoid, bounds::CorollaryId::ostrowski};
  std::vector<double> alpha{0.5, 1, 2};
  std::vector<double> lambda{0, 1.0 / 3.0, 0.5, 1};
  std::vector<double> x_frac{0.1, 0.5, 0.9};  // x = a + x_frac * (b - a)
  std::vector<double> q{1, 2, 3};
  std::vector<double> s{0.5, 1};
  std::vector<double> m{0.5, 1};
  GateMode gate = GateMode::checked;
  bounds::Tols tols;
  quad::QuadConfig quadrature;
  int jobs = 0;  // worker threads for the parallel path; 0 = runtime default
  OutFormat format = OutFormat::both;
  std::string out_dir = "out";
};

// Reads and validates a JSON config (schema: docs/sweep-config.md).  Errors
// carry the file path and the offending key.
SweepConfig load_config(const std::filesystem::path& file);
SweepConfig config_from_json(const std::string& text, const std::string& origin);

// One verified cell.  `corollary` is "general" for theorem rows.  For
// corollary rows, lhs/rhs/slack are in the corollary's own display scale.
struct ReportRow {
  std::string name;
  std::string family;
  std::string corollary;
  double alpha = 0, lambda = 0, x_frac = 0, q = 1;
  std::optional<double> s, m;
  bounds::CellStatus status = bounds::CellStatus::skipped;
  bool have_lhs = false;  // lhs/residual were actually computed (fault rows
                          // from quadrature non-convergence never get them)
  double lhs = 0, rhs = 0, slack = 0, residual = 0;
  std::string note;
};

// A corollary whose printed right-hand side differs from the specialised
// general bound beyond 1e-10 * (1 + |printed|) at this grid point.
struct Finding {
  std::string name;
  std::string family;
  std::string corollary;
  double alpha = 0, x_frac = 0, q = 1;
  std::optional<double> s, m;
  double printed = 0;      // the corollary's displayed closed form
  double specialized = 0;  // display_scale * general bound at the same point
  double delta = 0;        // |printed - specialized|
};

struct RunResult {
  std::vector<ReportRow> rows;
  std::vector<Finding> findings;
  long long held = 0, violated = 0, skipped = 0, faults = 0;
  int exit_code = 0;
};

RunResult run(const SweepConfig& cfg,
              convexity::Exec exec = convexity::Exec::parallel);

// CSV serialisation, schema v1: a "# schema=v1" line, a header row, then one
// row per cell with columns
//   name,family,corollary,alpha,lambda,xfrac,q,s,m,lhs,rhs,slack,holds,residual
// Inapplicable or unavailable numeric fields are empty; `holds` is one of
// holds/violated/skip/fault.
std::string to_csv(const std::vector<ReportRow>& rows);

// Writes report.csv / report.json (per cfg.format) under out_dir, creating
// it if needed.  The JSON report embeds the resolved config, a summary, all
// rows, and all findings.
void write_outputs(const SweepConfig& cfg, const RunResult& result,
                   const std::filesystem::path& out_dir);

enum class PlotMode { slack_vs_alpha, slack_vs_lambda, tightness_heatmap };

std::optional<PlotMode> plot_mode_from_string(const std::string& s);

// Extracts gnuplot-ready whitespace-separated data from general-bound rows:
// one file per (function, family) named <mode>_<function>_<family>.dat, with
// the minimum slack per alpha, per lambda, or per (alpha, lambda) cell.
// Throws ConfigError if no usable rows are selected; on error no file is
// written.  Returns the paths written.
std::vector<std::filesystem::path> emit_plot_data(
    const std::vector<ReportRow>& rows, PlotMode mode,
    const std::filesystem::path& out_dir);

// Randomized check that the direct and the derivative-identity routes to S_f
// agree, over catalog functions and uniform draws of (alpha, lambda, x) --
// `cases` plain cases plus `cases` scaled-interval cases cycling through
// `ms`.  A case fails when |direct - identity| > tol * (1 + |direct|).
struct IdentityReport {
  long long cases = 0;    // plain cases run
  long long m_cases = 0;  // scaled-interval cases run
  long long failures = 0;
  double max_rel_resid = 0;
  std::string worst;  // description of the argmax case
  double seconds = 0;
};

IdentityReport identity_suite(long long cases, std::uint64_t seed,
                              const std::vector<double>& ms, double tol,
                              const quad::QuadConfig& qcfg = quad::QuadConfig{});

// Closed-form coefficients vs the quadrature oracle over a grid, plus the
// internal consistency identities a1 == a2_m + a3_m and a2_s(.,.,1) == a2_m.
struct CoeffsReport {
  double worst_a1 = 0, worst_a2s = 0, worst_a3s = 0, worst_a2m = 0, worst_a3m = 0;
  double worst_decomp = 0;  // |a1 - (a2_m + a3_m)|
  double worst_s1 = 0;      // |a2_s(alpha, lambda, 1) - a2_m(alpha, lambda)|
  double worst_oracle() const;
};

CoeffsReport coeffs_grid(const std::vector<double>& alphas,
                         const std::vector<double>& lambdas,
                         const std::vector<double>& svals);

// Entry point behind the CLI: verbs verify, identity, coeffs, catalog, plot.
int cli_main(int argc, char** argv);

}  // namespace fracineq::harness
