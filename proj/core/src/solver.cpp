#include "elastica/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "elastica/competitors.hpp"
#include "elastica/detail/parallel.hpp"
#include "elastica/moduli.hpp"

namespace elastica {
namespace {

constexpr double kPi = std::numbers::pi;

Obstacle obstacle_for(const Obstacle& obstacle, AdmissibleClass cls) {
  return obstacle.with_mode(cls == AdmissibleClass::RhombSym ? ConstraintMode::Rhomb
                                                             : ConstraintMode::Standard);
}

std::vector<double> full_angles(std::span<const double> half) {
  std::vector<double> full(half.begin(), half.end());
  full.reserve(2 * half.size());
  for (auto it = half.rbegin(); it != half.rend(); ++it) full.push_back(-*it);
  return full;
}

DiscreteCurve semicircle(std::size_t n) {
  std::vector<double> a(n);
  for (std::size_t i = 0; i < n; ++i)
    a[i] = 0.5 * kPi - kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  return DiscreteCurve(0.5 * kPi, std::move(a));
}

}  // namespace

std::string to_string(AdmissibleClass c) { return c == AdmissibleClass::Sym ? "sym" : "rhomb"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Nontouching: return "Nontouching";
    case Verdict::Touching: return "Touching";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

AdmissibleClass class_from_string(const std::string& name) {
  if (name == "sym") return AdmissibleClass::Sym;
  if (name == "rhomb" || name == "rhomb-sym") return AdmissibleClass::RhombSym;
  throw std::invalid_argument("unknown admissible class '" + name + "' (expected sym or rhomb)");
}

void SolverConfig::validate() const {
  if (segments < DiscreteCurve::kMinSegments || segments % 2 != 0)
    throw std::invalid_argument("solver: segment count must be even and at least 8");
  if (!(schedule.start_weight > 0.0) || !(schedule.factor > 1.0) || schedule.rounds < 3)
    throw std::invalid_argument("solver: penalty schedule needs positive weight, factor > 1, rounds >= 3");
  if (inner.max_iterations < 1 || !(inner.gradient_tol > 0.0))
    throw std::invalid_argument("solver: inner iteration limit and tolerance must be positive");
  if (multistarts < 1) throw std::invalid_argument("solver: at least one start required");
  if (!(perturbation_scale >= 0.0))
    throw std::invalid_argument("solver: perturbation scale must be nonnegative");
}

// ---------------------------------------------------------------------------

SymmetricProblem::SymmetricProblem(const Obstacle& obstacle, double lambda, std::size_t segments)
    : obstacle_(&obstacle), lambda_(lambda), n_(segments) {
  if (segments % 2 != 0 || segments < DiscreteCurve::kMinSegments)
    throw std::invalid_argument("SymmetricProblem: segment count must be even and at least 8");
}

std::optional<DiscreteCurve> SymmetricProblem::curve(std::span<const double> half) const {
  auto full = full_angles(half);
  double S = 0.0;
  for (double a : full) S += std::cos(a);
  if (!(S > 1e-12)) return std::nullopt;
  return DiscreteCurve(static_cast<double>(n_) / S, std::move(full));
}

double SymmetricProblem::value(std::span<const double> half, std::span<double> grad,
                               double weight) const {
  const auto c = curve(half);
  if (!c) return std::numeric_limits<double>::infinity();
  const Penalties pen{obstacle_, weight, 0.0, {1.0, 0.0}};
  const double f = penalized_energy(*c, lambda_, pen);
  const auto g = energy_gradient(*c, lambda_, pen);

  // L = N / S with S = sum cos(theta_j): dL/dtheta_j = N sin(theta_j) / S^2.
  const auto th = c->angles();
  const double S = static_cast<double>(n_) / c->total_length();
  const double scale = g[n_] * static_cast<double>(n_) / (S * S);
  const std::size_t m = half.size();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = n_ - 1 - i;
    grad[i] = (g[i] + scale * std::sin(th[i])) - (g[j] + scale * std::sin(th[j]));
  }
  return f;
}

std::vector<double> SymmetricProblem::half_angles(const DiscreteCurve& c) const {
  if (c.segments() != n_)
    throw std::invalid_argument("SymmetricProblem: curve has the wrong segment count");
  const auto th = c.angles();
  std::vector<double> t(n_ / 2);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = 0.5 * (th[i] - th[n_ - 1 - i]);
  return t;
}

LocalResult run_schedule(const SymmetricProblem& problem, std::vector<double> t0,
                         const SolverConfig& config) {
  LocalResult out;
  std::vector<double> scratch(t0.size());
  out.initial_energy = problem.value(t0, scratch, config.schedule.start_weight);
  double w = config.schedule.start_weight;
  for (int r = 0; r < config.schedule.rounds; ++r, w *= config.schedule.factor) {
    const Objective obj = [&problem, w](std::span<const double> x, std::span<double> g) {
      return problem.value(x, g, w);
    };
    auto res = minimize_lbfgs(obj, std::move(t0), config.inner);
    t0 = std::move(res.x);
    out.residual = res.gradient_norm;
    out.converged = res.converged;
  }
  out.half = std::move(t0);
  return out;
}

std::vector<std::pair<std::string, DiscreteCurve>> start_pool(const Obstacle& obstacle,
                                                              double lambda,
                                                              const SolverConfig& config,
                                                              AdmissibleClass cls) {
  const std::size_t n = config.segments;
  std::vector<std::pair<std::string, DiscreteCurve>> pool;
  const int nl = moduli::n_lambda(lambda);
  pool.emplace_back("larc", zoo::export_curve(zoo::make_pinned_elastica(zoo::Family::Larc, lambda, nl), n));
  pool.emplace_back("semicircle", semicircle(n));
  pool.emplace_back("segment", DiscreteCurve(1.0, std::vector<double>(n, 0.0)));
  pool.emplace_back("leaf-segment",
                    zoo::leaf_segment_competitor(lambda, moduli::thresholds().q_star, n).curve);
  if (obstacle.is_cone()) {
    try {
      pool.emplace_back("escaping",
                        zoo::escaping_competitor(obstacle_for(obstacle, AdmissibleClass::Sym),
                                                 lambda, n).curve);
    } catch (const zoo::ConstructionError&) {
      // no real tangency at this lambda
    }
  }
  (void)cls;

  const std::size_t deterministic = pool.size();
  const SymmetricProblem probe(obstacle, lambda, n);
  for (std::size_t k = 0; pool.size() < static_cast<std::size_t>(config.multistarts); ++k) {
    std::mt19937_64 rng(config.seed * 0x9E3779B97F4A7C15ull + k + 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto base = pool[k % deterministic];
    auto t = probe.half_angles(base.second);
    std::vector<double> coef(5);
    for (std::size_t j = 0; j < coef.size(); ++j)
      coef[j] = config.perturbation_scale * gauss(rng) / static_cast<double>(j + 1);
    std::vector<double> trial(t.size());
    for (double amp = 1.0; amp > 1e-3; amp *= 0.5) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        const double z = (static_cast<double>(i) + 0.5) / static_cast<double>(t.size());
        double d = 0.0;
        for (std::size_t j = 0; j < coef.size(); ++j)
          d += coef[j] * std::sin(static_cast<double>(j + 1) * kPi * z);
        trial[i] = t[i] + amp * d;
      }
      if (probe.curve(trial)) break;
    }
    auto c = probe.curve(trial);
    if (!c) c = probe.curve(t);
    pool.emplace_back("random-" + std::to_string(k) + "(" + base.first + ")", *c);
  }
  if (pool.size() > static_cast<std::size_t>(config.multistarts))
    pool.erase(pool.begin() + config.multistarts, pool.end());
  return pool;
}

double sup_distance(const DiscreteCurve& a, const DiscreteCurve& b) {
  if (a.segments() != b.segments())
    throw std::invalid_argument("sup_distance: curves must have equal segment counts");
  const auto pa = a.positions();
  const auto pb = b.positions();
  double d = 0.0;
  for (std::size_t i = 0; i < pa.size(); ++i) d = std::max(d, norm(pa[i] - pb[i]));
  return d;
}

std::optional<FamilyMatch> match_family(const DiscreteCurve& c, double lambda) {
  std::optional<FamilyMatch> best;
  const int nl = moduli::n_lambda(lambda);
  const std::pair<zoo::Family, int> candidates[] = {
      {zoo::Family::Larc, nl}, {zoo::Family::Sarc, nl}, {zoo::Family::Loop, 1}};
  for (const auto& [family, n] : candidates) {
    for (bool reflected : {false, true}) {
      try {
        const auto spec = zoo::make_pinned_elastica(family, lambda, n, reflected);
        const double d = sup_distance(c, zoo::export_curve(spec, c.segments()));
        if (!best || d < best->distance) best = FamilyMatch{family, n, reflected, d};
      } catch (const std::exception&) {
        // family not available at this lambda
      }
    }
  }
  return best;
}

SolverReport minimize(const Obstacle& input_obstacle, double lambda, const SolverConfig& config,
                      AdmissibleClass cls) {
  config.validate();
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::domain_error("minimize: lambda must be positive");
  const Obstacle obstacle = obstacle_for(input_obstacle, cls);
  const SymmetricProblem problem(obstacle, lambda, config.segments);
  const auto pool = start_pool(obstacle, lambda, config, cls);

  std::vector<LocalResult> results(pool.size());
  detail::parallel_for(
      pool.size(),
      [&](std::size_t i) {
        results[i] = run_schedule(problem, problem.half_angles(pool[i].second), config);
      },
      config.parallel);

  std::vector<StartRecord> records;
  std::optional<std::size_t> best;
  std::optional<std::size_t> best_any;
  std::vector<DiscreteCurve> curves;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    auto c = problem.curve(results[i].half);
    if (!c) c = pool[i].second;
    const auto e = discrete_energy(*c, lambda);
    const double viol = obstacle_violation(c->positions(), obstacle);
    const bool ok = results[i].residual <= config.residual_tol * (1.0 + std::abs(e.total)) &&
                    viol <= config.feasibility_tol;
    records.push_back({pool[i].first, results[i].initial_energy, e.total, results[i].residual,
                       viol, ok});
    curves.push_back(*c);
    if (ok && (!best || e.total < records[*best].final_energy)) best = i;
    if (!best_any || e.total < records[*best_any].final_energy) best_any = i;
  }
  const std::size_t pick = best ? *best : *best_any;

  SolverReport rep{.curve = curves[pick],
                   .energy = discrete_energy(curves[pick], lambda),
                   .coincidence = constraint_slack(curves[pick], obstacle, config.touch_tol),
                   .matched_family = std::nullopt,
                   .best_start = records[pick].label,
                   .starts = {}};
  rep.residual = records[pick].residual;
  rep.violation = records[pick].violation;
  rep.converged = records[pick].converged;
  rep.matched_family = match_family(rep.curve, lambda);
  rep.lambda = lambda;
  rep.admissible_class = cls;
  rep.starts = std::move(records);
  if (!rep.converged)
    rep.verdict = Verdict::Indeterminate;
  else
    rep.verdict = rep.coincidence.touching ? Verdict::Touching : Verdict::Nontouching;
  return rep;
}

SweepResult lambda_sweep(const Obstacle& obstacle, const std::vector<double>& lambdas,
                         const SolverConfig& config, AdmissibleClass cls) {
  SolverConfig inner = config;
  inner.parallel = false;
  std::vector<std::optional<SolverReport>> slots(lambdas.size());
  detail::parallel_for(
      lambdas.size(), [&](std::size_t i) { slots[i] = minimize(obstacle, lambdas[i], inner, cls); },
      config.parallel);

  SweepResult out;
  for (auto& s : slots) out.reports.push_back(std::move(*s));
  for (const auto& r : out.reports) {
    if (r.verdict == Verdict::Indeterminate) out.has_indeterminate = true;
    if (r.verdict == Verdict::Nontouching &&
        (!out.largest_nontouching || r.lambda > *out.largest_nontouching))
      out.largest_nontouching = r.lambda;
    if (r.verdict == Verdict::Touching &&
        (!out.smallest_touching || r.lambda < *out.smallest_touching))
      out.smallest_touching = r.lambda;
  }
  if (out.largest_nontouching && out.smallest_touching)
    out.monotone = *out.largest_nontouching < *out.smallest_touching;
  return out;
}

}  // namespace elastica
