#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "elastica/competitors.hpp"
#include "elastica/drop.hpp"
#include "elastica/lbfgs.hpp"
#include "elastica/moduli.hpp"
#include "elastica/solver.hpp"
#include "elastica/stability.hpp"
#include "elastica/zoo.hpp"

using namespace elastica;

namespace {

SolverConfig quick(std::size_t n = 128) {
  SolverConfig c;
  c.segments = n;
  return c;
}

}  // namespace

TEST(Lbfgs, Rosenbrock) {
  const Objective f = [](std::span<const double> x, std::span<double> g) {
    const double a = 1 - x[0], b = x[1] - x[0] * x[0];
    g[0] = -2 * a - 400 * x[0] * b;
    g[1] = 200 * b;
    return a * a + 100 * b * b;
  };
  const auto r = minimize_lbfgs(f, {-1.2, 1.0});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-7);
  EXPECT_NEAR(r.x[1], 1.0, 1e-7);
  EXPECT_LE(r.gradient_max, 1e-8);
}

TEST(Lbfgs, ValuesNeverIncrease) {
  const Objective f = [&](std::span<const double> x, std::span<double> g) {
    double v = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double w = 1.0 + 10.0 * i;
      v += w * std::pow(x[i] - 1.0, 4) + 0.5 * w * (x[i] - 1.0) * (x[i] - 1.0);
      g[i] = 4 * w * std::pow(x[i] - 1.0, 3) + w * (x[i] - 1.0);
    }
    return v;
  };
  LbfgsOptions opt;
  opt.max_iterations = 1;
  std::vector<double> x(6, -2.0);
  double prev = 1e300;
  for (int it = 0; it < 40; ++it) {
    auto r = minimize_lbfgs(f, x, opt);
    EXPECT_LE(r.value, prev);
    prev = r.value;
    x = r.x;
  }
}

TEST(Lbfgs, RejectsNonFiniteStart) {
  const Objective f = [](std::span<const double>, std::span<double>) {
    return std::numeric_limits<double>::infinity();
  };
  EXPECT_THROW(minimize_lbfgs(f, {0.0}), std::invalid_argument);
}

TEST(SymmetricProblem, EndpointExactAndGradientMatchesFiniteDifferences) {
  const auto cone = Obstacle::cone(0.3);
  const SymmetricProblem p(cone, 0.4, 32);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g(0.0, 0.3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> t(16);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = 1.2 * std::cos(3.14159 * (i + 0.5) / 16) + g(rng);
    const auto c = p.curve(t);
    ASSERT_TRUE(c);
    EXPECT_NEAR(norm(c->end_point() - Point{1, 0}), 0.0, 1e-12);
    std::vector<double> grad(t.size()), tmp(t.size());
    p.value(t, grad, 1e3);
    double err = 0.0, gmax = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto a = t, b = t;
      a[i] += 1e-6;
      b[i] -= 1e-6;
      const double fd = (p.value(a, tmp, 1e3) - p.value(b, tmp, 1e3)) / 2e-6;
      err = std::max(err, std::abs(fd - grad[i]));
      gmax = std::max(gmax, std::abs(fd));
    }
    EXPECT_LE(err, 1e-5 * gmax);
  }
}

TEST(SymmetricProblem, HalfAnglesRoundTrip) {
  const auto cone = Obstacle::cone(0.3);
  const SymmetricProblem p(cone, 0.1, 64);
  const auto c = zoo::export_curve(zoo::make_pinned_elastica(zoo::Family::Larc, 0.1, 1), 64);
  const auto back = p.curve(p.half_angles(c));
  ASSERT_TRUE(back);
  EXPECT_LT(sup_distance(*back, c), 1e-10);
  EXPECT_FALSE(p.curve(std::vector<double>(32, 3.14159)));
}

TEST(SolverConfigValidation, RejectsBadValues) {
  SolverConfig c;
  c.segments = 7;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.schedule.rounds = 2;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.multistarts = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_THROW(minimize(Obstacle::cone(0.3), 0.0), std::domain_error);
}

TEST(Minimize, LargeLambdaTouches) {
  const auto r = minimize(Obstacle::cone(0.3), 2.0, quick());
  EXPECT_EQ(r.verdict, Verdict::Touching);
  EXPECT_LE(r.violation, 1e-6);
  EXPECT_LE(r.residual, 1e-5 * (1 + r.energy.total));
  EXPECT_TRUE(nonverticality_check(r.curve, Obstacle::cone(0.3)).passes());
}

TEST(Minimize, SmallLambdaRecoversLongerArc) {
  const auto r = minimize(Obstacle::cone(0.3), 0.05, quick());
  EXPECT_EQ(r.verdict, Verdict::Nontouching);
  ASSERT_TRUE(r.matched_family);
  EXPECT_EQ(r.matched_family->family, zoo::Family::Larc);
  EXPECT_LE(r.matched_family->distance, 2e-2);
  EXPECT_GT(r.coincidence.min_gap, r.coincidence.touch_tol);
  const double cf = zoo::closed_form_energy(zoo::make_pinned_elastica(zoo::Family::Larc, 0.05, 1)).total;
  EXPECT_NEAR(r.energy.total, cf, 1e-3 * cf);
}

TEST(Minimize, DescentFromEscapingCompetitor) {
  const auto r = minimize(Obstacle::cone(0.3), 0.1, quick());
  bool found = false;
  for (const auto& s : r.starts)
    if (s.label == "escaping") {
      found = true;
      EXPECT_LE(s.final_energy, s.initial_energy);
    }
  EXPECT_TRUE(found);
  const double esc = zoo::escaping_competitor(Obstacle::cone(0.3), 0.1, 128).energy;
  EXPECT_LE(r.energy.total, esc);
}

TEST(Minimize, DeterministicForFixedSeed) {
  auto cfg = quick();
  cfg.seed = 42;
  cfg.multistarts = 7;
  const auto a = minimize(Obstacle::cone(0.3), 1.0, cfg);
  const auto b = minimize(Obstacle::cone(0.3), 1.0, cfg);
  EXPECT_EQ(a.energy.total, b.energy.total);
  EXPECT_EQ(a.best_start, b.best_start);
  ASSERT_EQ(a.starts.size(), 7u);
}

TEST(Minimize, RhombAgreesWithStandardWhenNontouching) {
  const auto cone = Obstacle::cone(0.3);
  const auto s = minimize(cone, 0.05, quick());
  const auto r = minimize(cone, 0.05, quick(), AdmissibleClass::RhombSym);
  EXPECT_EQ(r.verdict, Verdict::Nontouching);
  EXPECT_EQ(r.admissible_class, AdmissibleClass::RhombSym);
  EXPECT_NEAR(r.energy.total, s.energy.total, 1e-3 * s.energy.total);
}

TEST(Minimize, SampledObstacle) {
  std::vector<Point> nodes;
  for (int i = 0; i <= 20; ++i) {
    const double x = i / 20.0;
    nodes.push_back({x, 0.25 - 4.8 * (x - 0.5) * (x - 0.5)});
  }
  const Obstacle hump(SampledLipschitz{nodes, 4.8});
  EXPECT_EQ(minimize(hump, 1.2, quick()).verdict, Verdict::Touching);
}

TEST(Minimize, IndeterminateWhenStarved) {
  auto cfg = quick(64);
  cfg.inner.max_iterations = 1;
  cfg.multistarts = 2;
  const auto r = minimize(Obstacle::cone(0.3), 1.0, cfg);
  EXPECT_EQ(r.verdict, Verdict::Indeterminate);
}

TEST(Minimize, RefinementDoesNotRaiseEnergy) {
  const auto cone = Obstacle::cone(0.3);
  const double e1 = minimize(cone, 1.2, quick(64)).energy.total;
  const double e2 = minimize(cone, 1.2, quick(128)).energy.total;
  // Discrete bending underestimates slightly; allow the penalty tolerance.
  EXPECT_LE(e2, e1 + 1e-3 * e1);
}

TEST(Sweep, TransitionZoneIsOrdered) {
  const auto cone = Obstacle::cone(0.3);
  const auto res = lambda_sweep(cone, {0.05, 0.75, 1.4}, quick());
  ASSERT_EQ(res.reports.size(), 3u);
  EXPECT_EQ(res.reports[0].verdict, Verdict::Nontouching);
  EXPECT_EQ(res.reports[1].verdict, Verdict::Touching);
  EXPECT_EQ(res.reports[2].verdict, Verdict::Touching);
  ASSERT_TRUE(res.largest_nontouching && res.smallest_touching);
  EXPECT_DOUBLE_EQ(*res.largest_nontouching, 0.05);
  EXPECT_DOUBLE_EQ(*res.smallest_touching, 0.75);
  EXPECT_TRUE(res.monotone);
  EXPECT_FALSE(res.has_indeterminate);
}

TEST(Names, SolverEnums) {
  EXPECT_EQ(to_string(Verdict::Touching), "Touching");
  EXPECT_EQ(class_from_string("rhomb"), AdmissibleClass::RhombSym);
  EXPECT_EQ(to_string(AdmissibleClass::Sym), "sym");
  EXPECT_THROW(class_from_string("free"), std::invalid_argument);
  EXPECT_EQ(to_string(StabilityVerdict::LocalMinConsistent), "LocalMin-consistent");
}

TEST(StabilityProbe, SubcriticalTipIsConsistent) {
  ProbeOptions o;
  o.segments = 1024;
  const auto r = scf_stability_probe(moduli::thresholds().h_star / 2, o);
  EXPECT_EQ(r.verdict, StabilityVerdict::LocalMinConsistent);
  EXPECT_FALSE(r.vertical_ends);
  for (const auto& ray : r.rays) EXPECT_LE(ray.epsilon, 0.05);
}

TEST(StabilityProbe, SupercriticalTipIsUnstable) {
  ProbeOptions o;
  o.segments = 1024;
  const auto r = scf_stability_probe(2 * moduli::thresholds().h_star, o);
  EXPECT_EQ(r.verdict, StabilityVerdict::Unstable);
  EXPECT_LT(r.best_delta, -r.noise_floor);
}

TEST(StabilityProbe, CriticalTipNeedsSegmentInsertion) {
  const auto r = scf_stability_probe(moduli::thresholds().h_star);
  EXPECT_TRUE(r.vertical_ends);
  EXPECT_EQ(r.verdict, StabilityVerdict::Unstable);
  double best_bump = 0.0, best_insert = 0.0;
  for (const auto& ray : r.rays) {
    double& best = ray.kind == "tip-bump" ? best_bump : best_insert;
    best = std::min(best, ray.delta);
  }
  EXPECT_GE(best_bump, -r.noise_floor);
  EXPECT_LT(best_insert, -r.noise_floor);
}

TEST(DropCheck, FigureEightIsStationary) {
  const double lam = 1.0;
  const auto leaf = zoo::export_curve(zoo::make_leaf(lam, 1), 128);
  const auto c = minimize_drop(std::vector<double>(leaf.angles().begin(), leaf.angles().end()), lam, {});
  const double cf = zoo::closed_form_energy(zoo::make_leaf(lam, 1)).total;
  EXPECT_NEAR(discrete_energy(c, lam).total, cf, 1e-2 * cf);
  EXPECT_LT(norm(c.end_point() - c.base_point()), 1e-4);
}

TEST(DropCheck, TwoFoldStartDoesNotBeatOneFold) {
  const double lam = 1.0;
  const auto leaf2 = zoo::export_curve(zoo::make_leaf(lam, 2), 128);
  const auto c = minimize_drop(std::vector<double>(leaf2.angles().begin(), leaf2.angles().end()), lam, {});
  const double e1 = zoo::closed_form_energy(zoo::make_leaf(lam, 1)).total;
  EXPECT_GE(discrete_energy(c, lam).total, e1 * (1 - 1e-2));
}

TEST(DropCheck, RandomTrials) {
  const auto r = drop_minimality_check(1.0, 6);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.trials.size(), 6u);
  EXPECT_THROW(drop_minimality_check(0.0, 3), std::domain_error);
}

TEST(DropObjective, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> th(24);
  for (auto& v : th) v = g(rng);
  std::vector<double> grad(th.size()), tmp(th.size());
  drop_objective(th, 0.8, 50.0, grad);
  for (std::size_t i = 0; i < th.size(); ++i) {
    auto a = th, b = th;
    a[i] += 1e-6;
    b[i] -= 1e-6;
    const double fd = (drop_objective(a, 0.8, 50.0, tmp) - drop_objective(b, 0.8, 50.0, tmp)) / 2e-6;
    EXPECT_NEAR(grad[i], fd, 1e-5 * (1 + std::abs(fd)));
  }
}
