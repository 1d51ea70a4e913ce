#pragma once

// Randomized check of every proven bound over sampled class members.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsg/functionals.hpp"

namespace gsg {

inline constexpr double kBoundSlack = 1e-9;
inline constexpr int kSuiteMaxAtoms = 6;

/// Fekete-Szegő parameters checked alongside the fixed-constant bounds.
inline constexpr std::array<std::pair<long, long>, 4> kSuiteFsMu{{{0, 1}, {1, 3}, {1, 1}, {3, 1}}};

struct BoundObservation {
  std::string name;  ///< functional name, "fs(mu=...)", "debranges_n", "lowner_An"
  double max_value;  ///< largest observed value (lhs for de Branges)
  double bound;
};

struct BoundViolation {
  std::string name;
  std::size_t sample;
  double value;
  double bound;
};

struct BoundSuiteReport {
  std::size_t samples;
  std::uint64_t seed;
  std::vector<BoundObservation> observations;
  std::vector<BoundViolation> violations;
};

/// Draws `samples` configurations of 1..6 atoms (Dirichlet weights, uniform
/// angles) and checks the proven table bounds, Fekete-Szegő at kSuiteFsMu,
/// the de Branges inequality for n <= 4 and the Löwner bounds on A2..A4,
/// all with slack kBoundSlack.
BoundSuiteReport verify_bounds(std::size_t samples, std::uint64_t seed);

void to_json(nlohmann::json& j, const BoundSuiteReport& r);

}  // namespace gsg
