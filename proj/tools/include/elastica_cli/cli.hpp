#pragma once

// Command-line front end. `run` parses argv, executes one command and returns
// the process exit code: 0 on success, 2 on domain or usage errors, 3 when
// the solver cannot classify its result.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "elastica/obstacle.hpp"

namespace elastica::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitIndeterminate = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `cone:<height>[:<slope>]`, an inline JSON object, or a path to a JSON file
/// holding {"kind": "cone", "height", "slope"} or
/// {"kind": "lipschitz", "nodes": [[x, y], ...], "lipschitz"}.
Obstacle parse_obstacle(const std::string& spec);

/// `a:step:b` (inclusive, step > 0) or a comma-separated list.
std::vector<double> parse_grid(const std::string& spec);

/// ELASTICA_SEED if set and parseable, otherwise 0.
std::uint64_t default_seed();

/// Rounds to the given number of significant digits (used for JSON output).
double round_sig(double x, int digits);

}  // namespace elastica::cli
