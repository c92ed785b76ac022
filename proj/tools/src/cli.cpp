#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "hypmetric/balls.hpp"
#include "hypmetric/domains.hpp"
#include "hypmetric/errors.hpp"
#include "hypmetric/json.hpp"
#include "hypmetric/metrics.hpp"
#include "hypmetric/report.hpp"
#include "hypmetric/verify.hpp"
#include "svg.hpp"

namespace hypmetric::cli {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
};

/// A usage problem detected after CLI11 parsing (bad format for a command, etc.).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  std::string text;
  bool claims_pass = true;
};

Json envelope(const std::string& command, Json config, Json results, const std::vector<Claim>& claims) {
  Json j;
  j["command"] = command;
  j["config"] = std::move(config);
  j["results"] = std::move(results);
  Json cs = Json::array();
  for (const Claim& c : claims) cs.push_back(to_json(c));
  j["claims"] = std::move(cs);
  return j;
}

bool all_pass(const std::vector<Claim>& claims) {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

Outcome json_outcome(const std::string& command, Json config, Json results, const std::vector<Claim>& claims) {
  return {envelope(command, std::move(config), std::move(results), claims).dump(2) + "\n", all_pass(claims)};
}

void require_format(const Globals& g, std::initializer_list<const char*> allowed, const std::string& command) {
  for (const char* f : allowed)
    if (g.format == f) return;
  throw UsageError("format '" + g.format + "' is not supported by '" + command + "'");
}

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

Point parse_point_for(const Domain& d, const std::string& text) {
  Point p = parse_point(text);
  if (p.dim() != d.dim()) throw ParseError("point '" + text + "' has the wrong dimension for the domain", text);
  return p;
}

/// Critical constant the library expects for a domain kind, if one is stated.
std::optional<CriticalCase> expected_critical(const Domain& d) {
  for (const CriticalCase& cs : critical_cases())
    if (parse_domain(cs.literal).kind() == d.kind()) return cs;
  return std::nullopt;
}

// --- commands --------------------------------------------------------------------

struct EvalArgs {
  std::string domain, metric, x, y;
};

Outcome run_eval(const Globals& g, const EvalArgs& a) {
  require_format(g, {"json", "csv"}, "eval");
  const Domain d = parse_domain(a.domain);
  const MetricId m = parse_metric(a.metric, d);
  const Point x = parse_point_for(d, a.x), y = parse_point_for(d, a.y);
  const double value = evaluate(m, d, x, y);
  if (g.format == "csv") return {"metric,value\n" + to_literal(m) + "," + shortest(value) + "\n", true};
  Json config{{"domain", to_literal(d)}, {"metric", to_literal(m)}, {"x", to_json(x)}, {"y", to_json(y)}};
  return json_outcome("eval", std::move(config), {{"value", number(value)}}, {});
}

struct DefectArgs {
  std::string domain;
  double c = 1.0;
  std::int64_t budget = SearchConfig{}.budget;
  int restarts = SearchConfig{}.restarts;
};

Outcome run_defect(const Globals& g, const DefectArgs& a) {
  require_format(g, {"json"}, "defect");
  const Domain d = parse_domain(a.domain);
  SearchConfig cfg;
  cfg.seed = g.seed;
  cfg.budget = a.budget;
  cfg.restarts = a.restarts;
  const SearchResult r = min_defect_search(d, a.c, cfg);
  std::vector<Claim> claims;
  const auto expected = expected_critical(d);
  const double critical = expected ? 0.5 * (expected->lo + expected->hi) : 2.0;
  if (a.c >= critical && (!expected || expected->grade != "evidence")) {
    Claim cl;
    cl.id = "defect.nonnegative";
    cl.pass = r.best.defect >= -1e-9;
    cl.expected = {{"min_defect", -1e-9}, {"reason", "h is a metric for this c"}};
    cl.observed = {{"defect", number(r.best.defect)}};
    cl.grade = "numeric";
    claims.push_back(std::move(cl));
  }
  Json config{{"domain", to_literal(d)}, {"c", a.c}, {"seed", g.seed}, {"budget", a.budget}, {"restarts", a.restarts}};
  return json_outcome("defect", std::move(config), to_json(r), claims);
}

struct CriticalArgs {
  std::string domain;
  CriticalCConfig cfg;
};

Outcome run_critical(const Globals& g, CriticalArgs a) {
  require_format(g, {"json"}, "critical-c");
  const Domain d = parse_domain(a.domain);
  a.cfg.search.seed = g.seed;
  const CriticalCInterval iv = critical_c(d, a.cfg);
  std::vector<Claim> claims;
  if (const auto cs = expected_critical(d)) claims.push_back(critical_claim(*cs, iv, 1000000));
  Json config{{"domain", to_literal(d)},         {"seed", g.seed},
              {"lo", a.cfg.lo},                  {"hi", a.cfg.hi},
              {"width", a.cfg.width},            {"epsilon", a.cfg.epsilon},
              {"budget", a.cfg.search.budget},   {"restarts", a.cfg.search.restarts}};
  return json_outcome("critical-c", std::move(config), to_json(iv), claims);
}

struct BoundsArgs {
  std::vector<std::string> positionals;
  bool all = false;
  BoundParams params;
  std::int64_t samples = 100000;
};

Claim bound_claim(const BoundReport& r, const std::string& domain, double c_value) {
  Claim c;
  c.id = "bounds." + r.lemma_id + "." + domain;
  c.grade = "numeric";
  if (r.retracted && c_value < 1.0) {
    // The retracted upper bound only breaks for c < 1; above that it is implied by h <= max(c,1) j.
    c.pass = r.violation_count > 0;
    c.expected = {{"witness_of_failure", true}};
  } else {
    c.pass = r.violation_count == 0;
    c.expected = {{"lo", number(r.theoretical_lo)}, {"hi", number(r.theoretical_hi)}, {"slack", kBoundSlack}};
  }
  c.observed = {{"violations", r.violation_count}, {"min", number(r.empirical_min)}, {"max", number(r.empirical_max)}};
  return c;
}

Outcome run_bounds(const Globals& g, const BoundsArgs& a) {
  require_format(g, {"json"}, "bounds");
  const std::size_t want = a.all ? 1 : 2;
  if (a.positionals.size() != want)
    throw UsageError(a.all ? "usage: bounds --all <domain>" : "usage: bounds <lemma> <domain> (or --all <domain>)");
  const std::string& domain_literal = a.positionals.back();
  const Domain d = parse_domain(domain_literal);
  std::vector<LemmaId> lemmas;
  if (a.all) {
    lemmas.assign(std::begin(kAllLemmas), std::end(kAllLemmas));
  } else {
    try {
      lemmas.push_back(parse_lemma_id(a.positionals.front()));
    } catch (const ArgumentError& e) {
      throw ParseError(e.what(), a.positionals.front());
    }
  }

  Json results = Json::object();
  Json skipped = Json::array();
  std::vector<Claim> claims;
  for (LemmaId id : lemmas) {
    try {
      const BoundReport r = quotient_bounds_check(id, d, a.params, a.samples, g.seed);
      claims.push_back(bound_claim(r, to_literal(d), a.params.c));
      results[r.lemma_id] = to_json(r);
    } catch (const ArgumentError& e) {
      if (!a.all) throw;
      skipped.push_back({{"lemma_id", std::string(lemma_label(id))}, {"reason", e.what()}});
    }
  }
  if (a.all) results["skipped"] = std::move(skipped);
  Json config{{"domain", to_literal(d)}, {"lemmas", a.all ? "all" : a.positionals.front()},
              {"c", a.params.c},         {"c0", a.params.c0},
              {"c1", a.params.c1},       {"samples", a.samples},
              {"seed", g.seed}};
  return json_outcome("bounds", std::move(config), std::move(results), claims);
}

struct BallsArgs {
  std::string domain, x;
  double c = 1.0;
  std::optional<double> r, h_radius, rho_radius;
};

Outcome run_balls(const Globals& g, const BallsArgs& a) {
  require_format(g, {"json"}, "balls");
  if (!a.r && !a.h_radius && !a.rho_radius) throw UsageError("balls needs at least one of --r, --h-radius, --rho-radius");
  const Domain d = parse_domain(a.domain);
  const Point x = parse_point_for(d, a.x);
  if (!contains(d, x)) throw DomainError("center (" + to_string(x) + ") is not inside the domain");
  Json results = Json::object();
  std::vector<Claim> claims;
  if (a.r) results["euclidean_inclusion"] = to_json(inclusion_radii_euclidean(d, x, *a.r, a.c));
  if (a.h_radius) {
    if (d.kind() != DomainKind::HalfSpace) throw UsageError("--h-radius needs the half-space domain");
    results["h_ball"] = to_json(h_ball_half_space(x, *a.h_radius, a.c));
  }
  if (a.rho_radius) {
    if (d.kind() == DomainKind::HalfSpace) {
      results["rho_ball"] = to_json(rho_ball_half_space(x, *a.rho_radius));
    } else if (d.kind() == DomainKind::UnitBall) {
      const RhoInclusionRadii rr = inclusion_radii_rho_unit_ball(x, *a.rho_radius, a.c);
      results["rho_ball"] = to_json(rr.rho_ball);
      results["rho_inclusion"] = to_json(rr);
      const double err = std::max(std::abs(rr.derived.r0 - rr.brute.r0), std::abs(rr.derived.r1 - rr.brute.r1));
      Claim cl;
      cl.id = "balls.rho_inclusion.derived_vs_brute";
      cl.pass = err <= 1e-6;
      cl.expected = {{"max_abs_difference", 1e-6}};
      cl.observed = {{"max_abs_difference", number(err)},
                     {"paper_r0_deviation", number(rr.paper.r0 - rr.brute.r0)},
                     {"paper_r1_deviation", number(rr.paper.r1 - rr.brute.r1)}};
      cl.grade = "numeric";
      claims.push_back(std::move(cl));
    } else {
      throw UsageError("--rho-radius needs the half-space or the unit ball");
    }
  }
  Json config{{"domain", to_literal(d)}, {"x", to_json(x)}, {"c", a.c}};
  if (a.r) config["r"] = *a.r;
  if (a.h_radius) config["h_radius"] = *a.h_radius;
  if (a.rho_radius) config["rho_radius"] = *a.rho_radius;
  return json_outcome("balls", std::move(config), std::move(results), claims);
}

struct SphereArgs {
  std::string domain, x;
  double c = 1.0;
  double r = 1.0;
  std::size_t m = 360;
};

Outcome run_sphere(const Globals& g, const SphereArgs& a) {
  require_format(g, {"json", "csv", "svg"}, "sphere-dump");
  const Domain d = parse_domain(a.domain);
  const Point x = parse_point_for(d, a.x);
  if (!contains(d, x)) throw DomainError("center (" + to_string(x) + ") is not inside the domain");
  if (g.format == "svg" && d.dim() != 2) throw UsageError("svg output needs a 2D domain");
  const std::vector<SphereSample> samples = sample_h_sphere(d, a.c, x, a.r, a.m);

  if (g.format == "csv") {
    std::string s = d.dim() == 2 ? "x,y,h\n" : "x,y,z,h\n";
    for (const SphereSample& p : samples) {
      for (double v : p.point.coords()) s += fixed6(v) + ",";
      s += fixed6(p.h) + "\n";
    }
    return {s, true};
  }

  double near = INFINITY, far = 0.0;
  for (const SphereSample& p : samples) {
    near = std::min(near, distance(p.point, x));
    far = std::max(far, distance(p.point, x));
  }
  std::optional<EuclideanBall> exact;
  if (d.kind() == DomainKind::HalfSpace) exact = h_ball_half_space(x, a.r, a.c).ball;
  if (g.format == "svg") return {render_sphere_svg(d, x, samples, exact, {{x, near}, {x, far}}), true};

  Json pts = Json::array();
  std::size_t multi = 0;
  for (const SphereSample& p : samples) {
    pts.push_back({{"point", to_json(p.point)}, {"h", number(p.h)}, {"multiple_crossings", p.multiple_crossings}});
    multi += p.multiple_crossings ? 1 : 0;
  }
  Json results{{"samples", std::move(pts)},
               {"multiple_crossing_rays", multi},
               {"euclidean_distance_range", {number(near), number(far)}}};
  if (exact) results["exact_ball"] = to_json(*exact);
  Json config{{"domain", to_literal(d)}, {"x", to_json(x)}, {"c", a.c}, {"r", a.r}, {"m", a.m}};
  return json_outcome("sphere-dump", std::move(config), std::move(results), {});
}

struct ReportArgs {
  std::optional<std::int64_t> samples;
};

Outcome run_report_command(const Globals& g, const ReportArgs& a) {
  require_format(g, {"json"}, "report");
  ReportOptions opts;
  opts.seed = g.seed;
  if (a.samples) opts.bound_samples = *a.samples;
  const Report r = run_report(opts);
  return {to_json(r).dump(2) + "\n", r.pass()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric mean distance metric toolkit", "hypmetric"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every randomized procedure")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--output", g.output, "Write the report to this file");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a metric at two points");
  eval_cmd->add_option("domain", eval.domain, "Domain literal")->required();
  eval_cmd->add_option("metric", eval.metric, "Metric literal")->required();
  eval_cmd->add_option("--x", eval.x, "First point")->required();
  eval_cmd->add_option("--y", eval.y, "Second point")->required();

  DefectArgs defect;
  auto* defect_cmd = app.add_subcommand("defect", "Search for the most negative triangle defect");
  defect_cmd->add_option("domain", defect.domain, "Domain literal")->required();
  defect_cmd->add_option("--c", defect.c, "Constant c")->required()->check(CLI::PositiveNumber);
  defect_cmd->add_option("--budget", defect.budget, "Defect evaluations")->check(CLI::PositiveNumber);
  defect_cmd->add_option("--restarts", defect.restarts, "Random restarts")->check(CLI::NonNegativeNumber);

  CriticalArgs crit;
  auto* crit_cmd = app.add_subcommand("critical-c", "Bisect for the critical constant");
  crit_cmd->add_option("domain", crit.domain, "Domain literal")->required();
  crit_cmd->add_option("--lo", crit.cfg.lo, "Lower end of the bracket");
  crit_cmd->add_option("--hi", crit.cfg.hi, "Upper end of the bracket");
  crit_cmd->add_option("--width", crit.cfg.width, "Final bracket width (>= 1e-3)");
  crit_cmd->add_option("--epsilon", crit.cfg.epsilon, "Defect tolerance");
  crit_cmd->add_option("--budget", crit.cfg.search.budget, "Evaluations per search")->check(CLI::PositiveNumber);
  crit_cmd->add_option("--restarts", crit.cfg.search.restarts, "Random restarts per search");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Sweep a quotient against its theoretical bounds");
  bounds_cmd->add_option("args", bounds.positionals, "[lemma] domain")->required();
  bounds_cmd->add_flag("--all", bounds.all, "Run every lemma that applies to the domain");
  bounds_cmd->add_option("--c", bounds.params.c, "Constant c")->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--c0", bounds.params.c0, "Smaller constant (L4.1)")->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--c1", bounds.params.c1, "Larger constant (L4.1)")->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--samples", bounds.samples, "Random samples")->check(CLI::NonNegativeNumber);

  BallsArgs balls;
  auto* balls_cmd = app.add_subcommand("balls", "Euclidean forms and inclusion radii of metric balls");
  balls_cmd->add_option("domain", balls.domain, "Domain literal")->required();
  balls_cmd->add_option("--x", balls.x, "Center")->required();
  balls_cmd->add_option("--c", balls.c, "Constant c")->check(CLI::PositiveNumber);
  balls_cmd->add_option("--r", balls.r, "Euclidean radius for inclusion radii");
  balls_cmd->add_option("--h-radius", balls.h_radius, "h-ball radius (half-space)");
  balls_cmd->add_option("--rho-radius", balls.rho_radius, "Hyperbolic radius");

  SphereArgs sphere;
  auto* sphere_cmd = app.add_subcommand("sphere-dump", "Sample an h-sphere");
  sphere_cmd->add_option("domain", sphere.domain, "Domain literal")->required();
  sphere_cmd->add_option("--x", sphere.x, "Center")->required();
  sphere_cmd->add_option("--c", sphere.c, "Constant c")->check(CLI::PositiveNumber);
  sphere_cmd->add_option("--r", sphere.r, "h-radius")->required()->check(CLI::PositiveNumber);
  sphere_cmd->add_option("--m", sphere.m, "Number of directions")->check(CLI::PositiveNumber);

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Run every acceptance check and emit one JSON summary");
  report_cmd->add_option("--samples", report.samples, "Samples per bound sweep")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Outcome outcome;
  try {
    if (*eval_cmd) outcome = run_eval(g, eval);
    else if (*defect_cmd) outcome = run_defect(g, defect);
    else if (*crit_cmd) outcome = run_critical(g, crit);
    else if (*bounds_cmd) outcome = run_bounds(g, bounds);
    else if (*balls_cmd) outcome = run_balls(g, balls);
    else if (*sphere_cmd) outcome = run_sphere(g, sphere);
    else outcome = run_report_command(g, report);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (offending token: '" << e.token() << "')\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedDimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kClaimFailed;
  }

  if (g.output.empty()) {
    out << outcome.text;
  } else {
    std::ofstream f(g.output, std::ios::binary);
    if (!f) {
      err << "error: cannot open output file '" << g.output << "'\n";
      return kUsage;
    }
    f << outcome.text;
  }
  if (!outcome.claims_pass) err << "one or more claims failed\n";
  return outcome.claims_pass ? kSuccess : kClaimFailed;
}

}  // namespace hypmetric::cli
