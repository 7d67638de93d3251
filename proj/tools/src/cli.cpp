#include "elastica_cli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "elastica/competitors.hpp"
#include "elastica/drop.hpp"
#include "elastica/energy.hpp"
#include "elastica/moduli.hpp"
#include "elastica/solver.hpp"
#include "elastica/stability.hpp"
#include "elastica/variational.hpp"
#include "elastica/zoo.hpp"
#include "elastica_cli/svg.hpp"

namespace elastica::cli {

using json = nlohmann::ordered_json;

namespace {

/// Usage error raised after parsing (conflicting or missing options).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json num(double x, int digits = 12) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig(x, digits);
}

std::string csv_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

/// CSV path paired with an SVG: the explicit --out, else the SVG path with a
/// .csv extension.
std::string csv_companion(const std::string& out_path, const std::string& svg_path) {
  if (!out_path.empty()) return out_path;
  const auto dot = svg_path.find_last_of('.');
  const auto slash = svg_path.find_last_of('/');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? svg_path.substr(0, dot) : svg_path) + ".csv";
}

json obstacle_json(const Obstacle& o) {
  json j;
  if (const auto* c = std::get_if<SymmetricCone>(&o.kind())) {
    j["kind"] = "cone";
    j["height"] = num(c->height);
    j["slope"] = num(c->slope);
  } else {
    const auto& s = std::get<SampledLipschitz>(o.kind());
    j["kind"] = "lipschitz";
    json nodes = json::array();
    for (Point p : s.nodes) nodes.push_back({num(p.x), num(p.y)});
    j["nodes"] = nodes;
    j["lipschitz"] = num(s.lipschitz);
  }
  j["mode"] = to_string(o.mode());
  return j;
}

std::string curve_csv(const DiscreteCurve& c) {
  const auto pts = c.positions();
  const auto th = node_tangent_angles(c);
  const auto k = node_curvatures(c);
  std::ostringstream s;
  s << "s,x,y,theta,k\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    s << csv_num(c.node_arclength(i)) << ',' << csv_num(pts[i].x) << ',' << csv_num(pts[i].y)
      << ',' << csv_num(th[i]) << ',' << csv_num(k[i]) << '\n';
  return s.str();
}

json report_json(const SolverReport& r, const Obstacle& obstacle, const SolverConfig& cfg) {
  json j;
  j["lambda"] = num(r.lambda);
  j["class"] = to_string(r.admissible_class);
  j["obstacle"] = obstacle_json(obstacle);
  j["segments"] = cfg.segments;
  j["seed"] = cfg.seed;
  j["verdict"] = to_string(r.verdict);
  j["energy"] = {{"bending", num(r.energy.bending)},
                 {"length", num(r.energy.length)},
                 {"total", num(r.energy.total)}};
  j["coincidence"] = {{"touching", r.coincidence.touching},
                      {"touch_nodes", r.coincidence.touch_nodes},
                      {"min_gap", num(r.coincidence.min_gap)},
                      {"min_gap_node", r.coincidence.min_gap_node},
                      {"touch_tol", num(r.coincidence.touch_tol)}};
  j["residual"] = num(r.residual);
  j["violation"] = num(r.violation);
  j["converged"] = r.converged;
  if (r.matched_family)
    j["matched_family"] = {{"family", std::string(zoo::to_string(r.matched_family->family))},
                           {"n", r.matched_family->n},
                           {"reflected", r.matched_family->reflected},
                           {"distance", num(r.matched_family->distance)}};
  else
    j["matched_family"] = nullptr;
  j["best_start"] = r.best_start;
  json starts = json::array();
  for (const auto& s : r.starts)
    starts.push_back({{"label", s.label},
                      {"initial_energy", num(s.initial_energy)},
                      {"final_energy", num(s.final_energy)},
                      {"residual", num(s.residual)},
                      {"violation", num(s.violation)},
                      {"converged", s.converged}});
  j["starts"] = starts;
  return j;
}

std::vector<double> default_scf_heights() {
  const double h = moduli::thresholds().h_star;
  return {0.5 * h, h, 2.0 * h};
}

// ---------------------------------------------------------------------------

struct Options {
  std::string out;
  std::string svg;
  std::string report;
  std::string obstacle;
  std::string family = "larc";
  std::string cls = "sym";
  std::string lambdas;
  std::vector<double> heights;
  double lambda = 0.1;
  double drop_lambda = 1.0;
  double height = 0.0;
  double width = 0.1;
  int n = 1;
  int trials = 20;
  int multistarts = 6;
  std::optional<int> max_iterations;
  std::size_t segments = 0;
  std::optional<std::uint64_t> seed;
  bool reflected = false;
};

int cmd_thresholds(std::ostream& out) {
  const auto t = moduli::solve_thresholds();
  json j;
  j["q_hat"] = num(t.q_hat, 10);
  j["q_star"] = num(t.q_star, 10);
  j["lambda_hat"] = num(t.lambda_hat, 10);
  j["h_star"] = num(t.h_star, 10);
  j["alpha_rect"] = num(moduli::alpha_rect(), 10);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const std::size_t n_samples = o.segments ? o.segments : 512;
  std::vector<Point> pts;
  std::ostringstream csv;
  csv << "s,x,y,k\n";
  auto row = [&](double s, Point p, double k) {
    pts.push_back(p);
    csv << csv_num(s) << ',' << csv_num(p.x) << ',' << csv_num(p.y) << ',' << csv_num(k) << '\n';
  };
  if (o.family == "scf") {
    if (!(o.height > 0.0)) throw UsageError("construct scf: --height must be positive");
    const auto scf = zoo::make_scf(o.height);
    const double L = 2.0 * scf.half_length;
    for (std::size_t i = 0; i <= n_samples; ++i) {
      const double s = L * static_cast<double>(i) / static_cast<double>(n_samples);
      row(s, zoo::scf_sample(scf, s), zoo::scf_curvature(scf, s));
    }
  } else {
    const auto spec = zoo::make_spec(zoo::family_from_string(o.family), o.lambda, o.n, o.reflected);
    for (std::size_t i = 0; i <= n_samples; ++i) {
      const double s = spec.length * static_cast<double>(i) / static_cast<double>(n_samples);
      row(s, zoo::sample(spec, s), zoo::signed_curvature(spec, s));
    }
  }
  if (!o.svg.empty()) {
    std::optional<Obstacle> obs;
    if (!o.obstacle.empty()) obs = parse_obstacle(o.obstacle);
    write_file(o.svg, render_svg({SvgPath{pts}}, obs ? &*obs : nullptr));
    write_file(csv_companion(o.out, o.svg), csv.str());
  } else {
    emit(o.out, csv.str(), out);
  }
  return kExitOk;
}

int cmd_energy_table(const Options& o, std::ostream& out) {
  const auto& t = moduli::thresholds();
  const auto lambdas = o.lambdas.empty() ? std::vector<double>{0.2, 0.5, t.lambda_hat, 1.5}
                                         : parse_grid(o.lambdas);
  std::ostringstream csv;
  csv << "lambda,family,n,q,alpha,bending,length,energy\n";
  auto add = [&](const zoo::ElasticaSpec& spec) {
    const auto e = zoo::closed_form_energy(spec);
    csv << csv_num(spec.lambda) << ',' << zoo::to_string(spec.family) << ',' << spec.n << ','
        << csv_num(spec.q) << ',' << csv_num(spec.alpha) << ',' << csv_num(e.bending) << ','
        << csv_num(e.length) << ',' << csv_num(e.total) << '\n';
  };
  const int n_max = std::max(o.n, 4);
  for (double lam : lambdas) {
    if (!(lam > 0.0)) throw std::domain_error("energy-table: lambda must be positive");
    const int n0 = moduli::n_lambda(lam);
    for (auto fam : {zoo::Family::Sarc, zoo::Family::Larc})
      for (int n = n0; n <= n_max; ++n) add(zoo::make_pinned_elastica(fam, lam, n));
    for (int n = 1; n <= n_max; ++n) add(zoo::make_pinned_elastica(zoo::Family::Loop, lam, n));
    for (int n = 1; n <= 2; ++n) add(zoo::make_leaf(lam, n));
    add(zoo::make_segment(lam));
  }
  emit(o.out, csv.str(), out);
  return kExitOk;
}

SolverConfig solver_config(const Options& o) {
  SolverConfig cfg;
  if (o.segments) cfg.segments = o.segments;
  cfg.multistarts = o.multistarts;
  cfg.seed = o.seed.value_or(default_seed());
  if (o.max_iterations) cfg.inner.max_iterations = *o.max_iterations;
  cfg.validate();
  return cfg;
}

int cmd_minimize(const Options& o, std::ostream& out) {
  if (o.obstacle.empty()) throw UsageError("minimize: --obstacle is required");
  const auto obstacle = parse_obstacle(o.obstacle);
  const auto cfg = solver_config(o);
  const auto cls = class_from_string(o.cls);
  const auto rep = minimize(obstacle, o.lambda, cfg, cls);
  const auto j = report_json(rep, obstacle, cfg);
  emit(o.report, j.dump(2) + "\n", out);
  if (!o.svg.empty()) {
    const auto shown = obstacle.with_mode(cls == AdmissibleClass::RhombSym ? ConstraintMode::Rhomb
                                                                           : ConstraintMode::Standard);
    write_file(o.svg, render_svg({SvgPath{rep.curve.positions()}}, &shown));
    write_file(csv_companion(o.out, o.svg), curve_csv(rep.curve));
  } else if (!o.out.empty()) {
    write_file(o.out, curve_csv(rep.curve));
  }
  return rep.verdict == Verdict::Indeterminate ? kExitIndeterminate : kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.obstacle.empty()) throw UsageError("sweep: --obstacle is required");
  if (o.lambdas.empty()) throw UsageError("sweep: --lambdas is required");
  const auto obstacle = parse_obstacle(o.obstacle);
  const auto cfg = solver_config(o);
  const auto cls = class_from_string(o.cls);
  const auto grid = parse_grid(o.lambdas);
  const double cap = 4.0 * moduli::thresholds().lambda_hat;
  for (double l : grid)
    if (!(l > 0.0) || l > cap)
      throw std::domain_error("sweep: every lambda must lie in (0, 4 lambda_hat]");
  const auto res = lambda_sweep(obstacle, grid, cfg, cls);

  json j;
  j["obstacle"] = obstacle_json(obstacle);
  j["class"] = to_string(cls);
  j["segments"] = cfg.segments;
  j["seed"] = cfg.seed;
  json rows = json::array();
  std::ostringstream csv;
  csv << "lambda,verdict,bending,length,energy,min_gap,residual,matched_family,distance\n";
  for (const auto& r : res.reports) {
    rows.push_back({{"lambda", num(r.lambda)},
                    {"verdict", to_string(r.verdict)},
                    {"energy", num(r.energy.total)},
                    {"min_gap", num(r.coincidence.min_gap)},
                    {"residual", num(r.residual)},
                    {"matched_family", r.matched_family
                                           ? json(std::string(zoo::to_string(r.matched_family->family)))
                                           : json(nullptr)},
                    {"distance", r.matched_family ? num(r.matched_family->distance) : json(nullptr)}});
    csv << csv_num(r.lambda) << ',' << to_string(r.verdict) << ',' << csv_num(r.energy.bending) << ','
        << csv_num(r.energy.length) << ',' << csv_num(r.energy.total) << ','
        << csv_num(r.coincidence.min_gap) << ',' << csv_num(r.residual) << ','
        << (r.matched_family ? zoo::to_string(r.matched_family->family) : "") << ','
        << (r.matched_family ? csv_num(r.matched_family->distance) : "") << '\n';
  }
  j["reports"] = rows;
  j["largest_nontouching"] = res.largest_nontouching ? num(*res.largest_nontouching) : json(nullptr);
  j["smallest_touching"] = res.smallest_touching ? num(*res.smallest_touching) : json(nullptr);
  j["monotone"] = res.monotone;
  j["has_indeterminate"] = res.has_indeterminate;
  emit(o.report, j.dump(2) + "\n", out);
  if (!o.out.empty()) write_file(o.out, csv.str());
  return res.has_indeterminate ? kExitIndeterminate : kExitOk;
}

int cmd_scf_probe(const Options& o, std::ostream& out) {
  ProbeOptions popt;
  if (o.segments) popt.segments = o.segments;
  json rows = json::array();
  std::ostringstream csv;
  csv << "tip_height,kind,epsilon,width,delta\n";
  for (double h : o.heights.empty() ? default_scf_heights() : o.heights) {
    if (!(h > 0.0)) throw std::domain_error("scf-probe: tip height must be positive");
    const auto r = scf_stability_probe(h, popt);
    rows.push_back({{"tip_height", num(h)},
                    {"ell", num(r.scf.ell)},
                    {"alpha", num(r.scf.alpha)},
                    {"phi", num(r.scf.phi)},
                    {"normalized_tip_slope", num(zoo::scf_normalized_tip_slope(r.scf))},
                    {"bending", num(r.bending)},
                    {"noise_floor", num(r.noise_floor)},
                    {"best_delta", num(r.best_delta)},
                    {"vertical_ends", r.vertical_ends},
                    {"verdict", to_string(r.verdict)}});
    for (const auto& ray : r.rays)
      csv << csv_num(h) << ',' << ray.kind << ',' << csv_num(ray.epsilon) << ','
          << csv_num(ray.width) << ',' << csv_num(ray.delta) << '\n';
  }
  emit(o.report, rows.dump(2) + "\n", out);
  if (!o.out.empty()) write_file(o.out, csv.str());
  return kExitOk;
}

int cmd_vi_check(const Options& o, std::ostream& out) {
  const std::size_t n = o.segments ? o.segments : 1024;
  json rows = json::array();
  for (double h : o.heights.empty() ? default_scf_heights() : o.heights) {
    if (!(h > 0.0)) throw std::domain_error("vi-check: tip height must be positive");
    const auto scf = zoo::make_scf(h);
    const auto c = zoo::scf_export(scf, n);
    const double L = c.total_length();
    const auto phi = bump(c, 0.5 * L, o.width * L);
    const auto cone = Obstacle::cone(h);
    const auto slack = constraint_slack(c, cone);
    rows.push_back({{"tip_height", num(h)},
                    {"pairing", num(vi_pairing(c, 0.0, phi))},
                    {"predicted", num(-4.0 * zoo::scf_tip_curvature_slope(scf))},
                    {"tip_curvature_slope", num(zoo::scf_tip_curvature_slope(scf))},
                    {"normalized_tip_slope", num(zoo::scf_normalized_tip_slope(scf))},
                    {"touch_nodes", slack.touch_nodes},
                    {"nonverticality_passes", nonverticality_check(c, cone).passes()}});
  }
  emit(o.report, rows.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_drop_check(const Options& o, std::ostream& out) {
  DropOptions dopt;
  if (o.segments) dopt.segments = o.segments;
  dopt.seed = o.seed.value_or(default_seed());
  const auto r = drop_minimality_check(o.drop_lambda, o.trials, dopt);
  json trials = json::array();
  for (const auto& t : r.trials)
    trials.push_back({{"energy", num(t.energy)}, {"closure_gap", num(t.closure_gap)}});
  json j{{"lambda", num(o.drop_lambda)},
         {"passed", r.passed},
         {"leaf_energy", num(r.leaf_energy)},
         {"min_energy", num(r.min_energy)},
         {"trials", trials}};
  emit(o.report, j.dump(2) + "\n", out);
  return kExitOk;
}

}  // namespace

// ---------------------------------------------------------------------------

double round_sig(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

std::uint64_t default_seed() {
  const char* env = std::getenv("ELASTICA_SEED");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const auto v = std::strtoull(env, &end, 10);
  return end && *end == '\0' ? v : 0;
}

std::vector<double> parse_grid(const std::string& spec) {
  auto to_d = [&](const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty()) throw std::invalid_argument("bad number '" + s + "' in grid '" + spec + "'");
    return v;
  };
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw std::invalid_argument("grid '" + spec + "' must be a:step:b");
    const double a = to_d(parts[0]);
    const double step = to_d(parts[1]);
    const double b = to_d(parts[2]);
    if (!(step > 0.0) || !(b >= a)) throw std::invalid_argument("grid '" + spec + "' needs step > 0 and b >= a");
    const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9));
    for (std::size_t i = 0; i <= count; ++i) out.push_back(a + step * static_cast<double>(i));
  } else {
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(to_d(p));
  }
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

Obstacle parse_obstacle(const std::string& spec) {
  if (spec.rfind("cone:", 0) == 0) {
    std::vector<double> v;
    std::stringstream ss(spec.substr(5));
    for (std::string p; std::getline(ss, p, ':');) {
      std::size_t pos = 0;
      double d = 0.0;
      try {
        d = std::stod(p, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != p.size()) throw ObstacleError("bad cone spec '" + spec + "'");
      v.push_back(d);
    }
    if (v.size() == 1) return Obstacle::cone(v[0]);
    if (v.size() == 2) return Obstacle::cone(v[0], v[1]);
    throw ObstacleError("cone spec must be cone:<height>[:<slope>]");
  }

  json j;
  try {
    if (!spec.empty() && spec.front() == '{') {
      j = json::parse(spec);
    } else {
      std::ifstream f(spec);
      if (!f) throw ObstacleError("obstacle '" + spec + "' is neither cone:<height> nor a readable JSON file");
      j = json::parse(f);
    }
  } catch (const json::exception& e) {
    throw ObstacleError(std::string("obstacle JSON: ") + e.what());
  }
  try {
    const auto mode = j.value("mode", std::string("standard")) == "rhomb" ? ConstraintMode::Rhomb
                                                                        : ConstraintMode::Standard;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "cone") {
      const double height = j.at("height").get<double>();
      if (j.contains("slope")) return Obstacle::cone(height, j["slope"].get<double>(), mode);
      return Obstacle::cone(height, mode);
    }
    if (kind == "lipschitz" || kind == "sampled") {
      SampledLipschitz s;
      for (const auto& p : j.at("nodes")) s.nodes.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
      s.lipschitz = j.at("lipschitz").get<double>();
      return Obstacle(s, mode);
    }
    throw ObstacleError("obstacle kind '" + kind + "' is not cone or lipschitz");
  } catch (const json::exception& e) {
    throw ObstacleError(std::string("obstacle JSON: ") + e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pinned elasticae with length penalty above an obstacle"};
  app.name("elastica");
  app.require_subcommand(1);
  Options o;

  auto add_seed = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "RNG seed (default: ELASTICA_SEED or 0)");
  };
  auto add_segments = [&](CLI::App* c, const std::string& what) {
    c->add_option("--segments,-N", o.segments, what)->check(CLI::PositiveNumber);
  };

  auto* thresholds = app.add_subcommand("thresholds", "Print q_hat, q_star, lambda_hat, h_star as JSON");

  auto* construct = app.add_subcommand("construct", "Sample a closed-form curve as CSV s,x,y,k");
  construct->add_option("--family", o.family, "sarc|larc|loop|leaf|rect|segment|scf");
  construct->add_option("--lambda", o.lambda, "length penalty");
  construct->add_option("--n", o.n, "fold number")->check(CLI::PositiveNumber);
  construct->add_option("--height", o.height, "tip height (scf only)");
  construct->add_flag("--reflected", o.reflected, "mirror across the x-axis");
  construct->add_option("--obstacle", o.obstacle, "obstacle overlay for --svg");
  construct->add_option("--out,-o", o.out, "CSV path (default stdout)");
  construct->add_option("--svg", o.svg, "SVG path; the CSV is written next to it");
  add_segments(construct, "number of sample intervals (default 512)");

  auto* table = app.add_subcommand("energy-table", "Closed-form energies of the zoo as CSV");
  table->add_option("--lambdas", o.lambdas, "a:step:b or comma list");
  table->add_option("--out,-o", o.out, "CSV path (default stdout)");

  auto* mini = app.add_subcommand("minimize", "Minimize E_lambda above an obstacle");
  mini->add_option("--obstacle", o.obstacle, "cone:<height>[:<slope>] or JSON")->required();
  mini->add_option("--lambda", o.lambda, "length penalty")->required();
  mini->add_option("--class", o.cls, "sym|rhomb");
  mini->add_option("--multistarts", o.multistarts, "number of starts")->check(CLI::PositiveNumber);
  mini->add_option("--max-iterations", o.max_iterations, "inner L-BFGS iteration cap")
      ->check(CLI::PositiveNumber);
  mini->add_option("--report", o.report, "JSON report path (default stdout)");
  mini->add_option("--out,-o", o.out, "curve CSV s,x,y,theta,k");
  mini->add_option("--svg", o.svg, "SVG of the minimizer over the obstacle");
  add_segments(mini, "segment count N (default 256)");
  add_seed(mini);

  auto* sweep = app.add_subcommand("sweep", "Minimize over a lambda grid");
  sweep->add_option("--obstacle", o.obstacle, "cone:<height>[:<slope>] or JSON")->required();
  sweep->add_option("--lambdas", o.lambdas, "a:step:b or comma list")->required();
  sweep->add_option("--class", o.cls, "sym|rhomb");
  sweep->add_option("--multistarts", o.multistarts, "number of starts")->check(CLI::PositiveNumber);
  sweep->add_option("--max-iterations", o.max_iterations, "inner L-BFGS iteration cap")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--report", o.report, "JSON path (default stdout)");
  sweep->add_option("--out,-o", o.out, "CSV summary path");
  add_segments(sweep, "segment count N (default 256)");
  add_seed(sweep);

  auto* probe = app.add_subcommand("scf-probe", "Stability probe of cut-and-glued free elasticae");
  probe->add_option("--height", o.heights, "tip heights (default h*/2, h*, 2h*)");
  probe->add_option("--report", o.report, "JSON path (default stdout)");
  probe->add_option("--out,-o", o.out, "CSV of all probe rays");
  add_segments(probe, "segment count (default 2048)");

  auto* vi = app.add_subcommand("vi-check", "Variational-inequality pairing at the SCF tip");
  vi->add_option("--height", o.heights, "tip heights (default h*/2, h*, 2h*)");
  vi->add_option("--width", o.width, "bump half-width as a fraction of L")->check(CLI::PositiveNumber);
  vi->add_option("--report", o.report, "JSON path (default stdout)");
  add_segments(vi, "segment count (default 1024)");

  auto* drop = app.add_subcommand("drop-check", "Randomized figure-eight minimality check");
  drop->add_option("--lambda", o.drop_lambda, "length penalty (default 1)");
  drop->add_option("--trials", o.trials, "number of random starts")->check(CLI::PositiveNumber);
  drop->add_option("--report", o.report, "JSON path (default stdout)");
  add_segments(drop, "segment count (default 128)");
  add_seed(drop);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  try {
    if (thresholds->parsed()) return cmd_thresholds(out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (table->parsed()) return cmd_energy_table(o, out);
    if (mini->parsed()) return cmd_minimize(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (probe->parsed()) return cmd_scf_probe(o, out);
    if (vi->parsed()) return cmd_vi_check(o, out);
    if (drop->parsed()) return cmd_drop_check(o, out);
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitDomain;
}

}  // namespace elastica::cli
