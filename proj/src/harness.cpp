#include "fracineq/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracineq/coeffs.hpp"
#include "fracineq/expr.hpp"
#include "fracineq/fracint.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fracineq::harness {

using json = nlohmann::ordered_json;

namespace {

// Printed-vs-specialised corollary agreement bar.  Differences below this are
// rounding; above it they are reported as findings.
constexpr double kFindingTol = 1e-10;

std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* to_string(GateMode g) {
  return g == GateMode::checked ? "checked" : "declared";
}

const char* to_string(OutFormat f) {
  switch (f) {
    case OutFormat::csv:
      return "csv";
    case OutFormat::json:
      return "json";
    case OutFormat::both:
      return "both";
  }
  return "both";
}

const char* to_string(PlotMode m) {
  switch (m) {
    case PlotMode::slack_vs_alpha:
      return "slack_vs_alpha";
    case PlotMode::slack_vs_lambda:
      return "slack_vs_lambda";
    case PlotMode::tightness_heatmap:
      return "tightness_heatmap";
  }
  return "";
}

const char* to_string(convexity::ClassKind k) {
  switch (k) {
    case convexity::ClassKind::convex:
      return "convex";
    case convexity::ClassKind::s_convex:
      return "s_convex";
    case convexity::ClassKind::m_convex:
      return "m_convex";
    case convexity::ClassKind::quasi_convex:
      return "quasi_convex";
  }
  return "";
}

std::optional<convexity::ClassKind> class_kind_from_string(const std::string& s) {
  if (s == "convex") return convexity::ClassKind::convex;
  if (s == "s_convex") return convexity::ClassKind::s_convex;
  if (s == "m_convex") return convexity::ClassKind::m_convex;
  if (s == "quasi_convex") return convexity::ClassKind::quasi_convex;
  return std::nullopt;
}

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ConfigError(origin + ": " + what);
}

double as_number(const json& v, const std::string& origin, const std::string& key) {
  if (!v.is_number()) fail(origin, "\"" + key + "\" must be a number");
  return v.get<double>();
}

std::vector<double> as_number_array(const json& v, const std::string& origin,
                                    const std::string& key) {
  if (!v.is_array() || v.empty()) fail(origin, "\"" + key + "\" must be a non-empty array of numbers");
  std::vector<double> out;
  for (const auto& e : v) out.push_back(as_number(e, origin, key));
  return out;
}

void check_range(const std::vector<double>& vals, const std::string& origin,
                 const std::string& key, double lo, double hi, bool lo_open) {
  for (double v : vals) {
    const bool below = lo_open ? (v <= lo) : (v < lo);
    if (below || v > hi)
      fail(origin, "\"" + key + "\" value " + num17(v) + " outside " +
                       (lo_open ? "(" : "[") + num17(lo) + ", " + num17(hi) + "]");
  }
}

convexity::FunctionSpec parse_inline_function(const json& v, const std::string& origin) {
  if (!v.is_object()) fail(origin, "inline_functions entries must be objects");
  for (const auto& [k, _] : v.items()) {
    static const std::set<std::string> known{"name", "f", "fprime", "domain", "classes", "M"};
    if (!known.count(k)) fail(origin, "inline_functions: unknown key \"" + k + "\"");
  }
  for (const char* req : {"name", "f", "fprime", "domain"})
    if (!v.contains(req)) fail(origin, std::string("inline_functions entry missing \"") + req + "\"");
  const std::string name = v["name"].is_string() ? v["name"].get<std::string>() : "";
  if (name.empty()) fail(origin, "inline_functions: \"name\" must be a non-empty string");
  if (!v["f"].is_string() || !v["fprime"].is_string())
    fail(origin, "inline_functions \"" + name + "\": \"f\" and \"fprime\" must be strings");
  if (!v["domain"].is_array() || v["domain"].size() != 2)
    fail(origin, "inline_functions \"" + name + "\": \"domain\" must be [lo, hi]");
  convexity::Interval dom{as_number(v["domain"][0], origin, "domain"),
                          as_number(v["domain"][1], origin, "domain")};
  std::vector<convexity::DeclaredClass> classes;
  if (v.contains("classes")) {
    if (!v["classes"].is_array())
      fail(origin, "inline_functions \"" + name + "\": \"classes\" must be an array");
    for (const auto& c : v["classes"]) {
      if (!c.is_object() || !c.contains("kind") || !c["kind"].is_string())
        fail(origin, "inline_functions \"" + name + "\": each class needs a string \"kind\"");
      auto kind = class_kind_from_string(c["kind"].get<std::string>());
      if (!kind)
        fail(origin, "inline_functions \"" + name + "\": unknown class kind \"" +
                         c["kind"].get<std::string>() + "\"");
      double param = 1.0;
      if (c.contains("param")) param = as_number(c["param"], origin, "param");
      classes.push_back({*kind, param});
    }
  }
  std::optional<double> M;
  if (v.contains("M")) M = as_number(v["M"], origin, "M");
  try {
    return convexity::make_function_spec(name, v["f"].get<std::string>(),
                                         v["fprime"].get<std::string>(), dom,
                                         std::move(classes), M);
  } catch (const expr::ParseError& e) {
    fail(origin, "inline_functions \"" + name + "\": " + e.what());
  } catch (const std::invalid_argument& e) {
    fail(origin, "inline_functions \"" + name + "\": " + e.what());
  }
}

}  // namespace

SweepConfig config_from_json(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, e.what());
  }
  if (!j.is_object()) fail(origin, "top level must be a JSON object");

  static const std::set<std::string> known{
      "seed",   "samples",    "functions", "inline_functions", "families",
      "corollaries", "alpha", "lambda",    "x_frac",           "q",
      "s",      "m",          "gate",      "tolerance",        "quadrature",
      "jobs",   "format",     "out_dir"};
  for (const auto& [k, _] : j.items())
    if (!known.count(k)) fail(origin, "unknown key \"" + k + "\"");

  SweepConfig cfg;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() && !j["seed"].is_number_unsigned())
      fail(origin, "\"seed\" must be an integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("samples")) {
    cfg.samples = static_cast<long long>(as_number(j["samples"], origin, "samples"));
    if (cfg.samples < 1) fail(origin, "\"samples\" must be >= 1");
  }
  if (j.contains("functions")) {
    if (!j["functions"].is_array()) fail(origin, "\"functions\" must be an array of names");
    cfg.functions.clear();
    for (const auto& e : j["functions"]) {
      if (!e.is_string()) fail(origin, "\"functions\" must contain strings");
      cfg.functions.push_back(e.get<std::string>());
    }
  }
  if (j.contains("inline_functions")) {
    if (!j["inline_functions"].is_array()) fail(origin, "\"inline_functions\" must be an array");
    for (const auto& e : j["inline_functions"])
      cfg.inline_functions.push_back(parse_inline_function(e, origin));
  }
  if (j.contains("families")) {
    if (!j["families"].is_array() || j["families"].empty())
      fail(origin, "\"families\" must be a non-empty array");
    cfg.families.clear();
    for (const auto& e : j["families"]) {
      if (!e.is_string()) fail(origin, "\"families\" must contain strings");
      auto f = bounds::family_from_string(e.get<std::string>());
      if (!f) fail(origin, "unknown family \"" + e.get<std::string>() + "\"");
      cfg.families.push_back(*f);
    }
  }
  if (j.contains("corollaries")) {
    if (!j["corollaries"].is_array()) fail(origin, "\"corollaries\" must be an array");
    cfg.general = false;
    cfg.corollaries.clear();
    for (const auto& e : j["corollaries"]) {
      if (!e.is_string()) fail(origin, "\"corollaries\" must contain strings");
      const std::string name = e.get<std::string>();
      if (name == "general") {
        cfg.general = true;
        continue;
      }
      auto c = bounds::corollary_from_string(name);
      if (!c) fail(origin, "unknown corollary \"" + name + "\"");
      cfg.corollaries.push_back(*c);
    }
    if (!cfg.general && cfg.corollaries.empty())
      fail(origin, "\"corollaries\" selects nothing");
  }
  if (j.contains("alpha")) cfg.alpha = as_number_array(j["alpha"], origin, "alpha");
  if (j.contains("lambda")) cfg.lambda = as_number_array(j["lambda"], origin, "lambda");
  if (j.contains("x_frac")) cfg.x_frac = as_number_array(j["x_frac"], origin, "x_frac");
  if (j.contains("q")) cfg.q = as_number_array(j["q"], origin, "q");
  if (j.contains("s")) cfg.s = as_number_array(j["s"], origin, "s");
  if (j.contains("m")) cfg.m = as_number_array(j["m"], origin, "m");
  check_range(cfg.alpha, origin, "alpha", 0, 1e6, /*lo_open=*/true);
  check_range(cfg.lambda, origin, "lambda", 0, 1, false);
  check_range(cfg.x_frac, origin, "x_frac", 0, 1, false);
  check_range(cfg.q, origin, "q", 1, 1e6, false);
  check_range(cfg.s, origin, "s", 0, 1, true);
  check_range(cfg.m, origin, "m", 0, 1, true);
  if (j.contains("gate")) {
    const std::string g = j["gate"].is_string() ? j["gate"].get<std::string>() : "";
    if (g == "checked")
      cfg.gate = GateMode::checked;
    else if (g == "declared")
      cfg.gate = GateMode::declared;
    else
      fail(origin, "\"gate\" must be \"checked\" or \"declared\"");
  }
  if (j.contains("tolerance")) {
    const json& t = j["tolerance"];
    if (!t.is_object()) fail(origin, "\"tolerance\" must be an object");
    for (const auto& [k, _] : t.items())
      if (k != "abs" && k != "rel" && k != "residual")
        fail(origin, "tolerance: unknown key \"" + k + "\"");
    if (t.contains("abs")) cfg.tols.abs = as_number(t["abs"], origin, "tolerance.abs");
    if (t.contains("rel")) cfg.tols.rel = as_number(t["rel"], origin, "tolerance.rel");
    if (t.contains("residual"))
      cfg.tols.residual = as_number(t["residual"], origin, "tolerance.residual");
    if (cfg.tols.abs <= 0 || cfg.tols.rel < 0 || cfg.tols.residual <= 0)
      fail(origin, "tolerance values must be positive");
  }
  if (j.contains("quadrature")) {
    const json& t = j["quadrature"];
    if (!t.is_object()) fail(origin, "\"quadrature\" must be an object");
    for (const auto& [k, _] : t.items())
      if (k != "nodes" && k != "panels" && k != "tol" && k != "max_doublings" && k != "grade")
        fail(origin, "quadrature: unknown key \"" + k + "\"");
    if (t.contains("nodes"))
      cfg.quadrature.nodes = static_cast<int>(as_number(t["nodes"], origin, "quadrature.nodes"));
    if (t.contains("panels"))
      cfg.quadrature.panels = static_cast<int>(as_number(t["panels"], origin, "quadrature.panels"));
    if (t.contains("tol")) cfg.quadrature.tol = as_number(t["tol"], origin, "quadrature.tol");
    if (t.contains("max_doublings"))
      cfg.quadrature.max_doublings =
          static_cast<int>(as_number(t["max_doublings"], origin, "quadrature.max_doublings"));
    if (t.contains("grade")) cfg.quadrature.grade = as_number(t["grade"], origin, "quadrature.grade");
    if (cfg.quadrature.nodes < 2 || cfg.quadrature.nodes > 256)
      fail(origin, "quadrature.nodes must be in [2, 256]");
    if (cfg.quadrature.panels < 1) fail(origin, "quadrature.panels must be >= 1");
    if (cfg.quadrature.tol <= 0) fail(origin, "quadrature.tol must be positive");
    if (cfg.quadrature.max_doublings < 0) fail(origin, "quadrature.max_doublings must be >= 0");
    if (!(cfg.quadrature.grade > 0 && cfg.quadrature.grade < 1))
      fail(origin, "quadrature.grade must be in (0, 1)");
  }
  if (j.contains("jobs")) {
    cfg.jobs = static_cast<int>(as_number(j["jobs"], origin, "jobs"));
    if (cfg.jobs < 0) fail(origin, "\"jobs\" must be >= 0");
  }
  if (j.contains("format")) {
    const std::string f = j["format"].is_string() ? j["format"].get<std::string>() : "";
    if (f == "csv")
      cfg.format = OutFormat::csv;
    else if (f == "json")
      cfg.format = OutFormat::json;
    else if (f == "both")
      cfg.format = OutFormat::both;
    else
      fail(origin, "\"format\" must be \"csv\", \"json\", or \"both\"");
  }
  if (j.contains("out_dir")) {
    if (!j["out_dir"].is_string() || j["out_dir"].get<std::string>().empty())
      fail(origin, "\"out_dir\" must be a non-empty string");
    cfg.out_dir = j["out_dir"].get<std::string>();
  }
  std::set<std::string> seen;
  for (const auto& fs : cfg.inline_functions)
    if (!seen.insert(fs.name).second)
      fail(origin, "duplicate inline function name \"" + fs.name + "\"");
  return cfg;
}

SweepConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError(file.string() + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str(), file.string());
}

// ---------------------------------------------------------------------------
// Sweep execution.
// ---------------------------------------------------------------------------

namespace {

struct GateOut {
  bool pass = false;
  std::string note;  // skip reason when !pass
};

struct LhsOut {
  bool have = false;   // values below were computed
  bool fault = false;  // route disagreement or quadrature failure
  double direct = 0, identity = 0, resid = 0;
  std::string note;
};

struct Cell {
  int fn = -1;
  bounds::Family family{};
  std::optional<bounds::CorollaryId> coro;  // nullopt => general row
  sfunc::SfParams p;                        // already specialised for corollary rows
  double x_frac = 0.5;                      // the value reported (x actually used)
  double q = 1;
  std::optional<double> s, m;
  int gate_job = -1;
  int lhs_job = -1;
};

// Pool of functions a run draws from: selected catalog entries followed by
// inline definitions, in configured order.
std::vector<const convexity::FunctionSpec*> resolve_pool(const SweepConfig& cfg) {
  const auto& cat = convexity::catalog();
  std::vector<const convexity::FunctionSpec*> pool;
  std::set<std::string> names;
  auto add = [&](const convexity::FunctionSpec* fs) {
    if (!names.insert(fs->name).second)
      throw ConfigError("duplicate function name \"" + fs->name + "\"");
    pool.push_back(fs);
  };
  if (cfg.functions.empty()) {
    for (const auto& fs : cat) add(&fs);
  } else {
    for (const auto& want : cfg.functions) {
      auto it = std::find_if(cat.begin(), cat.end(),
                             [&](const convexity::FunctionSpec& fs) { return fs.name == want; });
      if (it != cat.end()) {
        add(&*it);
        continue;
      }
      auto in = std::find_if(cfg.inline_functions.begin(), cfg.inline_functions.end(),
                             [&](const convexity::FunctionSpec& fs) { return fs.name == want; });
      if (in == cfg.inline_functions.end())
        throw ConfigError("unknown function \"" + want + "\" (not in catalog or inline_functions)");
      add(&*in);
    }
  }
  if (cfg.functions.empty())
    for (const auto& fs : cfg.inline_functions) add(&fs);
  if (pool.empty()) throw ConfigError("no functions selected");
  return pool;
}

double family_param(bounds::Family fam, double param) {
  // Meaning of the third grid axis per family; quasi has none.
  return fam == bounds::Family::quasi_convex ? 1.0 : param;
}

bool declared_matches(const convexity::FunctionSpec& fs, bounds::Family fam, double param) {
  for (const auto& dc : fs.classes) {
    switch (fam) {
      case bounds::Family::s_convex:
        if (dc.kind == convexity::ClassKind::s_convex && std::abs(dc.param - param) <= 1e-12)
          return true;
        if (dc.kind == convexity::ClassKind::convex && param == 1.0) return true;
        break;
      case bounds::Family::m_convex:
        if (dc.kind == convexity::ClassKind::m_convex && std::abs(dc.param - param) <= 1e-12)
          return true;
        if (dc.kind == convexity::ClassKind::convex && param == 1.0) return true;
        break;
      case bounds::Family::quasi_convex:
        if (dc.kind == convexity::ClassKind::quasi_convex) return true;
        break;
    }
  }
  return false;
}

GateOut run_gate(const convexity::FunctionSpec& fs, bounds::Family fam, double q,
                 double param, const SweepConfig& cfg, convexity::Exec exec) {
  const convexity::Interval dom = fs.domain;
  if (fam == bounds::Family::s_convex && dom.lo < 0)
    return {false, "domain leaves [0, inf); s-convexity undefined here"};
  if (fam == bounds::Family::m_convex && std::abs(dom.lo) > 1e-12)
    return {false, "domain is not [0, b]; m-convexity gate unavailable"};
  if (cfg.gate == GateMode::declared) {
    if (declared_matches(fs, fam, param)) return {true, ""};
    return {false, "class not declared"};
  }
  auto g = [&fs, q](double t) { return std::pow(std::abs(fs.dval(t)), q); };
  convexity::SampleConfig sc;
  sc.seed = cfg.seed;
  sc.samples = cfg.samples;
  convexity::Verdict v;
  try {
    switch (fam) {
      case bounds::Family::s_convex:
        v = convexity::check_s_convex(g, dom, param, sc, exec);
        break;
      case bounds::Family::m_convex:
        v = convexity::check_m_convex(g, dom, param, sc, exec);
        break;
      case bounds::Family::quasi_convex:
        v = convexity::check_quasi_convex(g, dom, sc, exec);
        break;
    }
  } catch (const expr::EvalError& e) {
    return {false, std::string("hypothesis check could not evaluate |f'|^q: ") + e.what()};
  }
  if (v.pass) return {true, ""};
  return {false, "sampled hypothesis check found a violation of the |f'|^q class"};
}

LhsOut run_lhs(const convexity::FunctionSpec& fs, const sfunc::SfParams& p, double m,
               const SweepConfig& cfg) {
  LhsOut out;
  auto f = [&fs](double t) { return fs.fval(t); };
  auto fp = [&fs](double t) { return fs.dval(t); };
  try {
    const bool scaled = m != 1.0;
    out.direct = scaled ? sfunc::sf_m_direct(f, m, p, cfg.quadrature)
                        : sfunc::sf_direct(f, p, cfg.quadrature);
    out.identity = scaled ? sfunc::sf_m_identity_rhs(fp, m, p, cfg.quadrature)
                          : sfunc::sf_identity_rhs(fp, p, cfg.quadrature);
    out.have = true;
    out.resid = std::abs(out.direct - out.identity) / (1.0 + std::abs(out.direct));
    if (out.resid > cfg.tols.residual) {
      out.fault = true;
      out.note = "direct and identity routes disagree (residual " + num17(out.resid) + ")";
    }
  } catch (const quad::NumericError& e) {
    out.fault = true;
    out.note = e.what();
  } catch (const expr::EvalError& e) {
    out.fault = true;
    out.note = e.what();
  }
  return out;
}

}  // namespace

RunResult run(const SweepConfig& cfg, convexity::Exec exec) {
#ifdef _OPENMP
  if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);
#endif
  const auto pool = resolve_pool(cfg);

  // Enumerate cells in a fixed order; gate and |S_f| work is deduplicated
  // into job tables so each (function, class, q, param) hypothesis is checked
  // once and each (function, x, lambda, alpha, m) operator value is
  // integrated once.
  std::vector<Cell> cells;
  using GateKey = std::tuple<int, int, double, double>;  // fn, family, q, param
  using LhsKey = std::tuple<int, double, double, double, double>;  // fn, alpha, x, lambda, m
  std::map<GateKey, int> gate_ids;
  std::map<LhsKey, int> lhs_ids;
  struct GateJob {
    int fn;
    bounds::Family fam;
    double q, param;
  };
  struct LhsJob {
    int fn;
    sfunc::SfParams p;
    double m;
  };
  std::vector<GateJob> gate_jobs;
  std::vector<LhsJob> lhs_jobs;

  auto gate_id = [&](int fn, bounds::Family fam, double q, double param) {
    GateKey key{fn, static_cast<int>(fam), q, param};
    auto it = gate_ids.find(key);
    if (it != gate_ids.end()) return it->second;
    const int id = static_cast<int>(gate_jobs.size());
    gate_ids.emplace(key, id);
    gate_jobs.push_back({fn, fam, q, param});
    return id;
  };
  auto lhs_id = [&](int fn, const sfunc::SfParams& p, double m) {
    LhsKey key{fn, p.alpha, p.x, p.lambda, m};
    auto it = lhs_ids.find(key);
    if (it != lhs_ids.end()) return it->second;
    const int id = static_cast<int>(lhs_jobs.size());
    lhs_ids.emplace(key, id);
    lhs_jobs.push_back({fn, p, m});
    return id;
  };

  auto push_cell = [&](int fn, bounds::Family fam, std::optional<bounds::CorollaryId> coro,
                       sfunc::SfParams p, double x_frac, double q, double param) {
    Cell c;
    c.fn = fn;
    c.family = fam;
    c.coro = coro;
    c.p = p;
    c.x_frac = x_frac;
    c.q = q;
    if (fam == bounds::Family::s_convex) c.s = param;
    if (fam == bounds::Family::m_convex) c.m = param;
    const double m_eff = fam == bounds::Family::m_convex ? param : 1.0;
    c.gate_job = gate_id(fn, fam, q, family_param(fam, param));
    c.lhs_job = lhs_id(fn, p, m_eff);
    cells.push_back(c);
  };

  for (int fn = 0; fn < static_cast<int>(pool.size()); ++fn) {
    const auto& fs = *pool[fn];
    const double a = fs.domain.lo, b = fs.domain.hi;
    for (const auto fam : cfg.families) {
      const std::vector<double> one{1.0};
      const std::vector<double>& params = fam == bounds::Family::s_convex   ? cfg.s
                                          : fam == bounds::Family::m_convex ? cfg.m
                                                                            : one;
      if (cfg.general) {
        for (double alpha : cfg.alpha)
          for (double lambda : cfg.lambda)
            for (double xf : cfg.x_frac)
              for (double q : cfg.q)
                for (double param : params) {
                  sfunc::SfParams p{a + xf * (b - a), lambda, alpha, a, b};
                  push_cell(fn, fam, std::nullopt, p, xf, q, param);
                }
      }
      for (const auto coro : cfg.corollaries) {
        const bool x_free = coro == bounds::CorollaryId::trapezoid ||
                            coro == bounds::CorollaryId::ostrowski;
        const std::vector<double> mid{0.5};
        const std::vector<double>& xs = x_free ? cfg.x_frac : mid;
        for (double alpha : cfg.alpha)
          for (double q : cfg.q)
            for (double param : params)
              for (double xf : xs) {
                sfunc::SfParams p{a + xf * (b - a), 0.0, alpha, a, b};
                p = bounds::specialize(coro, p);
                const double rep_xf = x_free ? xf : 0.5;
                push_cell(fn, fam, coro, p, rep_xf, q, param);
              }
      }
    }
  }

  // Phase 1: hypothesis gates.  The sampled checkers parallelise internally,
  // so this loop stays serial for deterministic, nesting-free behaviour.
  std::vector<GateOut> gates(gate_jobs.size());
  for (std::size_t i = 0; i < gate_jobs.size(); ++i) {
    const auto& gj = gate_jobs[i];
    gates[i] = run_gate(*pool[gj.fn], gj.fam, gj.q, gj.param, cfg, exec);
  }

  // Phase 2: the expensive |S_f| evaluations, one per unique parameter set.
  std::vector<LhsOut> lhs(lhs_jobs.size());
  const long long n_lhs = static_cast<long long>(lhs_jobs.size());
  if (exec == convexity::Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < n_lhs; ++i)
      lhs[i] = run_lhs(*pool[lhs_jobs[i].fn], lhs_jobs[i].p, lhs_jobs[i].m, cfg);
  } else {
    for (long long i = 0; i < n_lhs; ++i)
      lhs[i] = run_lhs(*pool[lhs_jobs[i].fn], lhs_jobs[i].p, lhs_jobs[i].m, cfg);
  }

  // Phase 3: assemble rows and findings in enumeration order.
  RunResult result;
  result.rows.resize(cells.size());
  std::vector<std::optional<Finding>> cell_findings(cells.size());
  const long long n_cells = static_cast<long long>(cells.size());
  auto assemble = [&](long long i) {
    const Cell& c = cells[i];
    const auto& fs = *pool[c.fn];
    ReportRow& r = result.rows[i];
    r.name = fs.name;
    r.family = bounds::to_string(c.family);
    r.corollary = c.coro ? bounds::to_string(*c.coro) : "general";
    r.alpha = c.p.alpha;
    r.lambda = c.p.lambda;
    r.x_frac = c.x_frac;
    r.q = c.q;
    r.s = c.s;
    r.m = c.m;
    const GateOut& g = gates[c.gate_job];
    if (!g.pass) {
      r.status = bounds::CellStatus::skipped;
      r.note = g.note;
      return;
    }
    if (c.coro && *c.coro == bounds::CorollaryId::ostrowski && !fs.sup_deriv) {
      r.status = bounds::CellStatus::skipped;
      r.note = "no sup-derivative bound available for the sup-based form";
      return;
    }
    const LhsOut& l = lhs[c.lhs_job];
    r.have_lhs = l.have;
    if (l.have) {
      r.lhs = std::abs(l.direct);
      r.residual = l.resid;
    }
    if (l.fault) {
      r.status = bounds::CellStatus::fault;
      r.note = l.note;
      return;
    }
    const double s_val = c.s.value_or(1.0);
    const double m_val = c.m.value_or(1.0);
    const std::optional<double> M =
        c.coro && *c.coro == bounds::CorollaryId::ostrowski ? fs.sup_deriv : std::nullopt;
    const bounds::DerivMags d = bounds::deriv_mags(fs, c.family, c.p, m_val, M);
    const double rhs_gen = bounds::rhs_general(c.family, d, c.p, c.q, s_val, m_val);
    const double scale = c.coro ? bounds::display_scale(*c.coro, c.family, c.p, m_val) : 1.0;
    r.lhs = scale * std::abs(l.direct);
    r.rhs = scale * rhs_gen;
    r.slack = r.rhs - r.lhs;
    const double bar = cfg.tols.abs + cfg.tols.rel * std::abs(r.rhs);
    r.status = r.slack >= -bar ? bounds::CellStatus::holds : bounds::CellStatus::violated;
    if (c.coro) {
      const double printed = bounds::corollary_rhs_printed(*c.coro, c.family, d, c.p, c.q,
                                                           s_val, m_val, M);
      const double specialized = scale * rhs_gen;
      const double delta = std::abs(printed - specialized);
      if (delta > kFindingTol * (1.0 + std::abs(printed))) {
        Finding fnd;
        fnd.name = fs.name;
        fnd.family = r.family;
        fnd.corollary = r.corollary;
        fnd.alpha = c.p.alpha;
        fnd.x_frac = c.x_frac;
        fnd.q = c.q;
        fnd.s = c.s;
        fnd.m = c.m;
        fnd.printed = printed;
        fnd.specialized = specialized;
        fnd.delta = delta;
        cell_findings[i] = fnd;
      }
    }
  };
  if (exec == convexity::Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < n_cells; ++i) assemble(i);
  } else {
    for (long long i = 0; i < n_cells; ++i) assemble(i);
  }

  for (long long i = 0; i < n_cells; ++i) {
    switch (result.rows[i].status) {
      case bounds::CellStatus::holds:
        ++result.held;
        break;
      case bounds::CellStatus::violated:
        ++result.violated;
        break;
      case bounds::CellStatus::skipped:
        ++result.skipped;
        break;
      case bounds::CellStatus::fault:
        ++result.faults;
        break;
    }
    if (cell_findings[i]) result.findings.push_back(*cell_findings[i]);
  }
  result.exit_code = result.faults > 0 ? 3 : result.violated > 0 ? 2 : 0;
  return result;
}

// ---------------------------------------------------------------------------
// Serialisation.
// ---------------------------------------------------------------------------

std::string to_csv(const std::vector<ReportRow>& rows) {
  std::string out = "# schema=v1\n";
  out += "name,family,corollary,alpha,lambda,xfrac,q,s,m,lhs,rhs,slack,holds,residual\n";
  for (const auto& r : rows) {
    const bool judged =
        r.status == bounds::CellStatus::holds || r.status == bounds::CellStatus::violated;
    out += r.name;
    out += ',';
    out += r.family;
    out += ',';
    out += r.corollary;
    out += ',';
    out += num17(r.alpha);
    out += ',';
    out += num17(r.lambda);
    out += ',';
    out += num17(r.x_frac);
    out += ',';
    out += num17(r.q);
    out += ',';
    out += r.s ? num17(*r.s) : "";
    out += ',';
    out += r.m ? num17(*r.m) : "";
    out += ',';
    out += r.have_lhs ? num17(r.lhs) : "";
    out += ',';
    out += judged ? num17(r.rhs) : "";
    out += ',';
    out += judged ? num17(r.slack) : "";
    out += ',';
    out += bounds::to_string(r.status);
    out += ',';
    out += r.have_lhs ? num17(r.residual) : "";
    out += '\n';
  }
  return out;
}

namespace {

json config_to_json(const SweepConfig& cfg) {
  json j;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  json fns = json::array();
  for (const auto& n : cfg.functions) fns.push_back(n);
  j["functions"] = fns;
  json inls = json::array();
  for (const auto& fs : cfg.inline_functions) {
    json e;
    e["name"] = fs.name;
    e["f"] = fs.f_src;
    e["fprime"] = fs.fprime_src;
    e["domain"] = {fs.domain.lo, fs.domain.hi};
    json cls = json::array();
    for (const auto& dc : fs.classes) {
      json c;
      c["kind"] = to_string(dc.kind);
      c["param"] = dc.param;
      cls.push_back(c);
    }
    e["classes"] = cls;
    if (fs.sup_deriv) e["M"] = *fs.sup_deriv;
    inls.push_back(e);
  }
  j["inline_functions"] = inls;
  json fams = json::array();
  for (const auto f : cfg.families) fams.push_back(bounds::to_string(f));
  j["families"] = fams;
  json coros = json::array();
  if (cfg.general) coros.push_back("general");
  for (const auto c : cfg.corollaries) coros.push_back(bounds::to_string(c));
  j["corollaries"] = coros;
  j["alpha"] = cfg.alpha;
  j["lambda"] = cfg.lambda;
  j["x_frac"] = cfg.x_frac;
  j["q"] = cfg.q;
  j["s"] = cfg.s;
  j["m"] = cfg.m;
  j["gate"] = to_string(cfg.gate);
  j["tolerance"] = {{"abs", cfg.tols.abs}, {"rel", cfg.tols.rel}, {"residual", cfg.tols.residual}};
  j["quadrature"] = {{"nodes", cfg.quadrature.nodes},
                     {"panels", cfg.quadrature.panels},
                     {"tol", cfg.quadrature.tol},
                     {"max_doublings", cfg.quadrature.max_doublings},
                     {"grade", cfg.quadrature.grade}};
  j["jobs"] = cfg.jobs;
  j["format"] = to_string(cfg.format);
  j["out_dir"] = cfg.out_dir;
  return j;
}

json row_to_json(const ReportRow& r) {
  const bool judged =
      r.status == bounds::CellStatus::holds || r.status == bounds::CellStatus::violated;
  json e;
  e["name"] = r.name;
  e["family"] = r.family;
  e["corollary"] = r.corollary;
  e["alpha"] = r.alpha;
  e["lambda"] = r.lambda;
  e["xfrac"] = r.x_frac;
  e["q"] = r.q;
  e["s"] = r.s ? json(*r.s) : json(nullptr);
  e["m"] = r.m ? json(*r.m) : json(nullptr);
  e["lhs"] = r.have_lhs ? json(r.lhs) : json(nullptr);
  e["rhs"] = judged ? json(r.rhs) : json(nullptr);
  e["slack"] = judged ? json(r.slack) : json(nullptr);
  e["holds"] = bounds::to_string(r.status);
  e["residual"] = r.have_lhs ? json(r.residual) : json(nullptr);
  if (!r.note.empty()) e["note"] = r.note;
  return e;
}

json finding_to_json(const Finding& f) {
  json e;
  e["name"] = f.name;
  e["family"] = f.family;
  e["corollary"] = f.corollary;
  e["alpha"] = f.alpha;
  e["xfrac"] = f.x_frac;
  e["q"] = f.q;
  e["s"] = f.s ? json(*f.s) : json(nullptr);
  e["m"] = f.m ? json(*f.m) : json(nullptr);
  e["printed"] = f.printed;
  e["specialized"] = f.specialized;
  e["delta"] = f.delta;
  return e;
}

}  // namespace

void write_outputs(const SweepConfig& cfg, const RunResult& result,
                   const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  if (cfg.format == OutFormat::csv || cfg.format == OutFormat::both) {
    std::ofstream out(out_dir / "report.csv", std::ios::binary);
    if (!out) throw ConfigError((out_dir / "report.csv").string() + ": cannot write");
    out << to_csv(result.rows);
  }
  if (cfg.format == OutFormat::json || cfg.format == OutFormat::both) {
    json j;
    j["schema"] = "v1";
    j["config"] = config_to_json(cfg);
    j["summary"] = {{"rows", result.rows.size()},   {"held", result.held},
                    {"violated", result.violated},  {"skipped", result.skipped},
                    {"faults", result.faults},      {"findings", result.findings.size()},
                    {"exit_code", result.exit_code}};
    json rows = json::array();
    for (const auto& r : result.rows) rows.push_back(row_to_json(r));
    j["rows"] = rows;
    json findings = json::array();
    for (const auto& f : result.findings) findings.push_back(finding_to_json(f));
    j["findings"] = findings;
    std::ofstream out(out_dir / "report.json", std::ios::binary);
    if (!out) throw ConfigError((out_dir / "report.json").string() + ": cannot write");
    out << j.dump(2) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Plot data.
// ---------------------------------------------------------------------------

std::optional<PlotMode> plot_mode_from_string(const std::string& s) {
  if (s == "slack_vs_alpha") return PlotMode::slack_vs_alpha;
  if (s == "slack_vs_lambda") return PlotMode::slack_vs_lambda;
  if (s == "tightness_heatmap") return PlotMode::tightness_heatmap;
  return std::nullopt;
}

std::vector<std::filesystem::path> emit_plot_data(const std::vector<ReportRow>& rows,
                                                  PlotMode mode,
                                                  const std::filesystem::path& out_dir) {
  // Groups keep first-appearance order so output files list deterministically.
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>, std::vector<const ReportRow*>> groups;
  for (const auto& r : rows) {
    const bool judged =
        r.status == bounds::CellStatus::holds || r.status == bounds::CellStatus::violated;
    if (r.corollary != "general" || !judged) continue;
    auto key = std::make_pair(r.name, r.family);
    auto [it, fresh] = groups.emplace(key, std::vector<const ReportRow*>{});
    if (fresh) order.push_back(key);
    it->second.push_back(&r);
  }
  if (order.empty())
    throw ConfigError("plot: selection contains no judged general-bound rows");
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  for (const auto& key : order) {
    const auto& grp = groups[key];
    const auto path =
        out_dir / ("plot_" + std::string(to_string(mode)) + "_" + key.first + "_" + key.second + ".dat");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError(path.string() + ": cannot write");
    out << "# function=" << key.first << " family=" << key.second << '\n';
    if (mode == PlotMode::slack_vs_alpha || mode == PlotMode::slack_vs_lambda) {
      const bool by_alpha = mode == PlotMode::slack_vs_alpha;
      out << "# columns: " << (by_alpha ? "alpha" : "lambda") << " min_slack\n";
      std::map<double, double> min_slack;
      for (const auto* r : grp) {
        const double k = by_alpha ? r->alpha : r->lambda;
        auto [it, fresh] = min_slack.emplace(k, r->slack);
        if (!fresh) it->second = std::min(it->second, r->slack);
      }
      for (const auto& [k, v] : min_slack) out << num17(k) << ' ' << num17(v) << '\n';
    } else {
      out << "# columns: alpha lambda min_slack (blank line between alpha blocks)\n";
      std::map<std::pair<double, double>, double> min_slack;
      for (const auto* r : grp) {
        auto [it, fresh] = min_slack.emplace(std::make_pair(r->alpha, r->lambda), r->slack);
        if (!fresh) it->second = std::min(it->second, r->slack);
      }
      double prev_alpha = std::nan("");
      for (const auto& [k, v] : min_slack) {
        if (!std::isnan(prev_alpha) && k.first != prev_alpha) out << '\n';
        prev_alpha = k.first;
        out << num17(k.first) << ' ' << num17(k.second) << ' ' << num17(v) << '\n';
      }
    }
    written.push_back(path);
  }
  return written;
}

// ---------------------------------------------------------------------------
// Randomized identity suite and coefficient grid.
// ---------------------------------------------------------------------------

IdentityReport identity_suite(long long cases, std::uint64_t seed,
                              const std::vector<double>& ms, double tol,
                              const quad::QuadConfig& qcfg) {
  if (cases < 1) throw ConfigError("identity: cases must be >= 1");
  for (double m : ms)
    if (!(m > 0 && m <= 1)) throw ConfigError("identity: m values must lie in (0, 1]");
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto& cat = convexity::catalog();
  std::vector<const convexity::FunctionSpec*> origin_pool;  // scaled intervals need [0, b]
  for (const auto& fs : cat)
    if (fs.domain.lo == 0) origin_pool.push_back(&fs);

  IdentityReport rep;
  char desc[160];
  auto one = [&](const convexity::FunctionSpec& fs, double m) {
    const double a = fs.domain.lo, b = fs.domain.hi;
    sfunc::SfParams p;
    p.alpha = 0.02 + (3.0 - 0.02) * unit(rng);
    p.lambda = unit(rng);
    p.a = a;
    p.b = b;
    p.x = a + (0.02 + 0.96 * unit(rng)) * (b - a);
    auto f = [&fs](double t) { return fs.fval(t); };
    auto fp = [&fs](double t) { return fs.dval(t); };
    const bool scaled = m != 1.0;
    const double d = scaled ? sfunc::sf_m_direct(f, m, p, qcfg) : sfunc::sf_direct(f, p, qcfg);
    const double i =
        scaled ? sfunc::sf_m_identity_rhs(fp, m, p, qcfg) : sfunc::sf_identity_rhs(fp, p, qcfg);
    const double resid = std::abs(d - i) / (1.0 + std::abs(d));
    if (resid > tol) ++rep.failures;
    if (resid > rep.max_rel_resid) {
      rep.max_rel_resid = resid;
      std::snprintf(desc, sizeof desc, "%s alpha=%.6g lambda=%.6g x=%.6g m=%.6g", fs.name.c_str(),
                    p.alpha, p.lambda, p.x, m);
      rep.worst = desc;
    }
  };
  std::uniform_int_distribution<std::size_t> pick_any(0, cat.size() - 1);
  for (long long i = 0; i < cases; ++i) {
    one(cat[pick_any(rng)], 1.0);
    ++rep.cases;
  }
  if (!ms.empty() && !origin_pool.empty()) {
    std::uniform_int_distribution<std::size_t> pick_origin(0, origin_pool.size() - 1);
    for (long long i = 0; i < cases; ++i) {
      one(*origin_pool[pick_origin(rng)], ms[static_cast<std::size_t>(i) % ms.size()]);
      ++rep.m_cases;
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

double CoeffsReport::worst_oracle() const {
  return std::max({worst_a1, worst_a2s, worst_a3s, worst_a2m, worst_a3m});
}

CoeffsReport coeffs_grid(const std::vector<double>& alphas, const std::vector<double>& lambdas,
                         const std::vector<double>& svals) {
  CoeffsReport rep;
  auto bump = [](double& worst, double diff) { worst = std::max(worst, std::abs(diff)); };
  for (double alpha : alphas)
    for (double lambda : lambdas) {
      bump(rep.worst_a1,
           coeffs::a1(alpha, lambda) - coeffs::oracle_moment(alpha, lambda, coeffs::Weight::one));
      const double a2m = coeffs::a2_m(alpha, lambda);
      const double a3m = coeffs::a3_m(alpha, lambda);
      bump(rep.worst_a2m, a2m - coeffs::oracle_moment(alpha, lambda, coeffs::Weight::pow_t, 1.0));
      bump(rep.worst_a3m,
           a3m - coeffs::oracle_moment(alpha, lambda, coeffs::Weight::pow_one_minus_t, 1.0));
      bump(rep.worst_decomp, coeffs::a1(alpha, lambda) - (a2m + a3m));
      bump(rep.worst_s1, coeffs::a2_s(alpha, lambda, 1.0) - a2m);
      for (double s : svals) {
        bump(rep.worst_a2s, coeffs::a2_s(alpha, lambda, s) -
                                coeffs::oracle_moment(alpha, lambda, coeffs::Weight::pow_t, s));
        bump(rep.worst_a3s,
             coeffs::a3_s(alpha, lambda, s) -
                 coeffs::oracle_moment(alpha, lambda, coeffs::Weight::pow_one_minus_t, s));
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// CLI.
// ---------------------------------------------------------------------------

namespace {

void print_summary(const RunResult& res, const SweepConfig& cfg) {
  std::printf("rows=%zu held=%lld violated=%lld skipped=%lld faults=%lld findings=%zu\n",
              res.rows.size(), res.held, res.violated, res.skipped, res.faults,
              res.findings.size());
  if (cfg.format == OutFormat::csv || cfg.format == OutFormat::both)
    std::printf("wrote %s\n", (std::filesystem::path(cfg.out_dir) / "report.csv").c_str());
  if (cfg.format == OutFormat::json || cfg.format == OutFormat::both)
    std::printf("wrote %s\n", (std::filesystem::path(cfg.out_dir) / "report.json").c_str());
  for (const auto& f : res.findings) {
    std::printf(
        "finding: %s %s/%s alpha=%.6g q=%.6g%s%s printed=%.17g specialized=%.17g delta=%.3g\n",
        f.name.c_str(), f.family.c_str(), f.corollary.c_str(), f.alpha, f.q,
        f.s ? (" s=" + num17(*f.s)).c_str() : "", f.m ? (" m=" + num17(*f.m)).c_str() : "",
        f.printed, f.specialized, f.delta);
    break;  // one sample on stdout; the full list lives in report.json
  }
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"verification toolkit for fractional-integral inequalities"};
  app.require_subcommand(1);

  std::string config_path, out_override, format_override, mode_str;
  bool serial = false;
  long long cases = 500;
  std::uint64_t seed = 0;
  bool have_seed = false;
  double tol = -1;
  int jobs = -1;
  std::vector<double> ms{0.25, 0.5, 0.75, 1.0};
  bool do_check = false;
  long long samples = 10000;

  auto* verify = app.add_subcommand("verify", "run a config-driven sweep and write reports");
  verify->add_option("--config", config_path, "JSON sweep config")->required();
  verify->add_option("--out", out_override, "override the config's out_dir");
  verify->add_option("--seed", seed, "override the config's seed")->each([&](const std::string&) {
    have_seed = true;
  });
  verify->add_option("--tol", tol, "override the absolute slack tolerance");
  verify->add_option("--format", format_override, "csv, json, or both")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  verify->add_option("--jobs", jobs, "worker threads (0 = runtime default)");
  verify->add_flag("--serial", serial, "use the serial reference path");

  auto* identity = app.add_subcommand("identity", "randomized direct-vs-identity agreement suite");
  identity->add_option("--cases", cases, "plain cases (the scaled suite runs as many again)");
  identity->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
    have_seed = true;
  });
  identity->add_option("--tol", tol, "relative residual bar (default 1e-9)");
  identity->add_option("--m", ms, "scale factors for the scaled-interval suite");

  auto* coeffs_cmd =
      app.add_subcommand("coeffs", "closed-form moment coefficients vs the quadrature oracle");
  coeffs_cmd->add_option("--tol", tol, "worst-difference bar (default 1e-10)");

  auto* catalog_cmd = app.add_subcommand("catalog", "list built-in functions");
  catalog_cmd->add_flag("--check", do_check,
                        "run declared-class and derivative-consistency checks");
  catalog_cmd->add_option("--samples", samples, "samples per class check");
  catalog_cmd->add_option("--seed", seed, "sample stream seed")->each([&](const std::string&) {
    have_seed = true;
  });
  catalog_cmd->add_flag("--serial", serial, "use the serial reference path");

  auto* plot = app.add_subcommand("plot", "run a sweep and extract gnuplot-ready data");
  plot->add_option("--config", config_path, "JSON sweep config")->required();
  plot->add_option("--mode", mode_str, "slack_vs_alpha, slack_vs_lambda, or tightness_heatmap")
      ->required()
      ->check(CLI::IsMember({"slack_vs_alpha", "slack_vs_lambda", "tightness_heatmap"}));
  plot->add_option("--out", out_override, "output directory (default: config's out_dir)");
  plot->add_flag("--serial", serial, "use the serial reference path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const auto exec = serial ? convexity::Exec::serial : convexity::Exec::parallel;
  try {
    if (*verify) {
      SweepConfig cfg = load_config(config_path);
      if (!out_override.empty()) cfg.out_dir = out_override;
      if (have_seed) cfg.seed = seed;
      if (tol > 0) cfg.tols.abs = tol;
      if (jobs >= 0) cfg.jobs = jobs;
      if (format_override == "csv") cfg.format = OutFormat::csv;
      if (format_override == "json") cfg.format = OutFormat::json;
      if (format_override == "both") cfg.format = OutFormat::both;
      const RunResult res = run(cfg, exec);
      write_outputs(cfg, res, cfg.out_dir);
      print_summary(res, cfg);
      return res.exit_code;
    }
    if (*identity) {
      const IdentityReport rep = identity_suite(cases, have_seed ? seed : 20260814u, ms,
                                                tol > 0 ? tol : 1e-9);
      std::printf("cases=%lld scaled_cases=%lld failures=%lld max_rel_resid=%.3g (%s) in %.2fs\n",
                  rep.cases, rep.m_cases, rep.failures, rep.max_rel_resid, rep.worst.c_str(),
                  rep.seconds);
      return rep.failures == 0 ? 0 : 2;
    }
    if (*coeffs_cmd) {
      const std::vector<double> alphas{0.25, 0.5, 1, 1.5, 2, 3};
      const std::vector<double> lambdas{0, 0.1, 1.0 / 3.0, 0.5, 0.9, 1};
      const std::vector<double> svals{0.25, 0.5, 0.75, 1};
      const CoeffsReport rep = coeffs_grid(alphas, lambdas, svals);
      std::printf("worst |closed - oracle|: a1=%.3g a2_s=%.3g a3_s=%.3g a2_m=%.3g a3_m=%.3g\n",
                  rep.worst_a1, rep.worst_a2s, rep.worst_a3s, rep.worst_a2m, rep.worst_a3m);
      std::printf("consistency: |a1-(a2_m+a3_m)|=%.3g  |a2_s(s=1)-a2_m|=%.3g\n", rep.worst_decomp,
                  rep.worst_s1);
      const double bar = tol > 0 ? tol : 1e-10;
      const bool ok = rep.worst_oracle() <= bar && rep.worst_decomp <= 1e-14 && rep.worst_s1 <= 1e-14;
      std::printf("%s (bar %.3g)\n", ok ? "OK" : "MISMATCH", bar);
      return ok ? 0 : 2;
    }
    if (*catalog_cmd) {
      bool all_ok = true;
      for (const auto& fs : convexity::catalog()) {
        std::printf("%-12s f=%-18s f'=%-22s domain=[%g, %g]", fs.name.c_str(), fs.f_src.c_str(),
                    fs.fprime_src.c_str(), fs.domain.lo, fs.domain.hi);
        if (fs.sup_deriv) std::printf(" M=%g", *fs.sup_deriv);
        std::printf(" classes:");
        if (fs.classes.empty()) std::printf(" (none)");
        for (const auto& dc : fs.classes) {
          if (dc.kind == convexity::ClassKind::s_convex ||
              dc.kind == convexity::ClassKind::m_convex)
            std::printf(" %s(%g)", to_string(dc.kind), dc.param);
          else
            std::printf(" %s", to_string(dc.kind));
        }
        std::printf("\n");
        if (do_check) {
          const auto dr = expr::check_derivative_consistency(fs.f, fs.fprime, fs.domain.lo,
                                                             fs.domain.hi);
          std::printf("  derivative consistency: %s (max dev %.3g at x=%.6g)\n",
                      dr.ok ? "ok" : "FAIL", dr.max_abs_dev, dr.worst_x);
          all_ok = all_ok && dr.ok;
          convexity::SampleConfig sc;
          if (have_seed) sc.seed = seed;
          sc.samples = samples;
          auto f = [&fs](double t) { return fs.fval(t); };
          for (const auto& dc : fs.classes) {
            const auto v = convexity::check_declared(f, fs.domain, dc, sc, exec);
            std::printf("  %s", to_string(dc.kind));
            if (dc.kind == convexity::ClassKind::s_convex ||
                dc.kind == convexity::ClassKind::m_convex)
              std::printf("(%g)", dc.param);
            if (v.pass) {
              std::printf(": ok (%lld samples)\n", v.samples_checked);
            } else {
              all_ok = false;
              std::printf(": FAIL at x=%.6g y=%.6g t=%.6g (lhs=%.17g rhs=%.17g)\n", v.witness->x,
                          v.witness->y, v.witness->t, v.witness->lhs, v.witness->rhs);
            }
          }
        }
      }
      return all_ok ? 0 : 2;
    }
    if (*plot) {
      SweepConfig cfg = load_config(config_path);
      const RunResult res = run(cfg, exec);
      const auto out_dir =
          out_override.empty() ? std::filesystem::path(cfg.out_dir) : std::filesystem::path(out_override);
      const auto files = emit_plot_data(res.rows, *plot_mode_from_string(mode_str), out_dir);
      for (const auto& p : files) std::printf("wrote %s\n", p.c_str());
      return res.faults > 0 ? 3 : 0;
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const expr::ParseError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const quad::NumericError& e) {
    std::fprintf(stderr, "numerical fault: %s\n", e.what());
    return 3;
  } catch (const expr::EvalError& e) {
    std::fprintf(stderr, "numerical fault: %s\n", e.what());
    return 3;
  }
  return 1;
}

}  // namespace fracineq::harness
