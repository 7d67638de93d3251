#pragma once

// Penalty-method minimization of E_lambda over reflectionally symmetric
// curves from (0,0) to (1,0) above an obstacle, with outcome classification.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/energy.hpp"
#include "elastica/lbfgs.hpp"
#include "elastica/obstacle.hpp"
#include "elastica/variational.hpp"
#include "elastica/zoo.hpp"

namespace elastica {

enum class AdmissibleClass { Sym, RhombSym };
enum class Verdict { Nontouching, Touching, Indeterminate };

std::string to_string(AdmissibleClass c);
std::string to_string(Verdict v);
AdmissibleClass class_from_string(const std::string& name);

struct PenaltySchedule {
  double start_weight = 1e2;
  double factor = 10.0;
  int rounds = 6;
};

struct SolverConfig {
  std::size_t segments = 256;  ///< N, must be even
  PenaltySchedule schedule;
  LbfgsOptions inner;
  int multistarts = 6;              ///< total number of starts
  double perturbation_scale = 0.3;  ///< amplitude of random angle perturbations
  std::uint64_t seed = 0;
  double touch_tol = -1.0;          ///< negative: 1e-3 * peak height
  double residual_tol = 1e-5;       ///< stationarity: residual <= tol * (1 + |E|)
  double feasibility_tol = 1e-6;
  bool parallel = true;             ///< run starts concurrently

  void validate() const;
};

struct FamilyMatch {
  zoo::Family family;
  int n;
  bool reflected;
  double distance;  ///< max node distance to the family export at equal N
};

struct StartRecord {
  std::string label;
  double initial_energy;  ///< penalized energy at the first weight
  double final_energy;    ///< E_lambda
  double residual;
  double violation;
  bool converged;
};

struct SolverReport {
  DiscreteCurve curve;
  EnergyParts energy;
  CoincidenceSummary coincidence;
  double residual = 0.0;   ///< Euclidean norm of the projected gradient at the last weight
  double violation = 0.0;  ///< max obstacle violation over nodes
  bool converged = false;
  std::optional<FamilyMatch> matched_family;
  Verdict verdict = Verdict::Indeterminate;
  double lambda = 0.0;
  AdmissibleClass admissible_class = AdmissibleClass::Sym;
  std::string best_start;
  std::vector<StartRecord> starts;
};

/// Symmetric half-curve parametrization: the full angles are
/// [t_1..t_M, -t_M..-t_1] and the segment length is fixed by x(L) = 1, i.e.
/// h = 1 / sum cos(theta). The endpoint constraint therefore holds exactly.
class SymmetricProblem {
 public:
  SymmetricProblem(const Obstacle& obstacle, double lambda, std::size_t segments);

  /// Curve for half angles t, or nullopt when sum cos(theta) <= 0.
  std::optional<DiscreteCurve> curve(std::span<const double> half) const;

  /// E_lambda + w * sum max(0, -slack)^2 and its gradient in t.
  double value(std::span<const double> half, std::span<double> grad, double weight) const;

  /// Half angles of a full curve that starts at the origin (assumed symmetric;
  /// the two halves are averaged).
  std::vector<double> half_angles(const DiscreteCurve& c) const;

  std::size_t segments() const { return n_; }

 private:
  const Obstacle* obstacle_;
  double lambda_;
  std::size_t n_;
};

/// One start: runs the full penalty schedule from half angles t0.
struct LocalResult {
  std::vector<double> half;
  double initial_energy = 0.0;
  double residual = 0.0;
  bool converged = false;
};
LocalResult run_schedule(const SymmetricProblem& problem, std::vector<double> t0,
                         const SolverConfig& config);

/// Starting curves: Larc(lambda, 1, n_lambda), semicircle, segment,
/// leaf-segment, escaping competitor (cones only), then seeded random
/// low-frequency perturbations, truncated to config.multistarts.
std::vector<std::pair<std::string, DiscreteCurve>> start_pool(const Obstacle& obstacle,
                                                              double lambda,
                                                              const SolverConfig& config,
                                                              AdmissibleClass cls);

/// Closest of Larc/Sarc (n = n_lambda) and Loop (n = 1), both reflections.
std::optional<FamilyMatch> match_family(const DiscreteCurve& c, double lambda);

/// Max node distance between two curves with equal segment counts.
double sup_distance(const DiscreteCurve& a, const DiscreteCurve& b);

SolverReport minimize(const Obstacle& obstacle, double lambda, const SolverConfig& config = {},
                      AdmissibleClass cls = AdmissibleClass::Sym);

struct SweepResult {
  std::vector<SolverReport> reports;
  std::optional<double> largest_nontouching;
  std::optional<double> smallest_touching;
  bool monotone = true;  ///< no nontouching lambda above a touching one
  bool has_indeterminate = false;
};

/// Independent minimize calls over the grid, run concurrently.
SweepResult lambda_sweep(const Obstacle& obstacle, const std::vector<double>& lambdas,
                         const SolverConfig& config = {},
                         AdmissibleClass cls = AdmissibleClass::Sym);

}  // namespace elastica
