#pragma once

// Directional probe of the bending energy around a symmetric cut-and-glued
// free elastica (lambda = 0, local exploration only).

#include <string>
#include <vector>

#include "elastica/point.hpp"
#include "elastica/zoo.hpp"

namespace elastica {

enum class StabilityVerdict { LocalMinConsistent, Unstable };
std::string to_string(StabilityVerdict v);

struct ProbeRay {
  std::string kind;  ///< "tip-bump" or "segment-insertion"
  double epsilon;
  double width;
  double delta;      ///< B(perturbed) - B(SCF)
};

struct StabilityReport {
  StabilityVerdict verdict = StabilityVerdict::LocalMinConsistent;
  zoo::ScfSpec scf{};
  double bending = 0.0;      ///< polyline bending of the SCF at the probe resolution
  double noise_floor = 0.0;  ///< 3 |B_N - B_2N|
  double best_delta = 0.0;   ///< most negative delta over all rays
  bool vertical_ends = false;
  std::vector<ProbeRay> rays;
};

struct ProbeOptions {
  std::vector<double> epsilons{0.05, 0.02, 0.01, 0.005, 0.002, 0.001};
  std::vector<double> widths{0.05, 0.1, 0.2};  ///< bump half-widths as fractions of L
  std::size_t segments = 2048;
  double vertical_tol = 1e-6;
  double insertion_length = 0.3;  ///< length of each inserted vertical segment
  std::vector<double> insertion_widths{0.5, 0.9};  ///< fractions of the inserted length
  std::vector<double> insertion_epsilons{1e-2, 3e-3, 1e-3, 3e-4, 1e-4, 3e-5};
};

/// Upward tip-bump rays on the SCF of the given height; when the end tangents
/// are vertical, additionally the segment-insertion rays. Unstable iff some ray
/// lowers the bending energy by more than the noise floor.
StabilityReport scf_stability_probe(double tip_height, const ProbeOptions& options = {});

/// Exact SCF nodes at equal arclength spacing.
std::vector<Point> scf_nodes(const zoo::ScfSpec& scf, std::size_t segments);

}  // namespace elastica
