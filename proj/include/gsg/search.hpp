#pragma once

// Multi-restart derivative-free maximization of a coefficient functional over
// class members generated by finitely many Herglotz atoms. Every candidate is
// a genuine class member, so no constraint handling is needed.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gsg/caratheodory.hpp"
#include "gsg/functionals.hpp"

namespace gsg {

struct SearchConfig {
  FunctionalId functional = FunctionalId::a3;
  int atom_count = 4;
  int restarts = 64;
  int refine_iters = 400;  ///< maximum pattern sweeps per restart
  std::uint64_t seed = 0;
  std::optional<Complex> mu;  ///< Fekete-Szegő parameter, default 0
};

struct SearchResult {
  FunctionalId functional;
  Complex mu;
  double best_value;
  HerglotzAtoms best_atoms;
  double bound;
  std::optional<Rational> bound_exact;  ///< absent for non-real mu
  double gap;                           ///< bound - best_value, may be slightly negative
  std::string note;
  /// (restart index, incumbent after that restart), in restart order.
  std::vector<std::pair<int, double>> history;
};

/// Throws std::invalid_argument when atom_count < 1, restarts < 1 or
/// refine_iters < 0. Restarts run on up to GSG_THREADS worker threads; each
/// owns an RNG seeded from (seed, restart index), so results do not depend
/// on the thread count.
SearchResult maximize(const SearchConfig& cfg);

/// |functional| at the atoms, on the same path the search uses.
double search_objective(FunctionalId id, const HerglotzAtoms& atoms, Complex mu = {0.0, 0.0});

struct FsPoint {
  Rational mu;
  double best_value;
  Rational bound;
  double gap;
};

/// maximize(|a3 - mu a2^2|) for each mu. Throws std::invalid_argument on an
/// empty grid.
std::vector<FsPoint> fs_sweep(const std::vector<Rational>& mu_values, const SearchConfig& cfg);

struct A6Exploration {
  SearchResult result;  ///< gap is against the proven bound
  Rational conjectured_bound;
  double gap_conjectured;
};

/// Maximizes |a6| with atom_count raised to at least 6.
A6Exploration a6_explore(SearchConfig cfg);

/// Worker threads: GSG_THREADS if set and positive, else hardware
/// concurrency, never below 1.
unsigned search_thread_count();

void to_json(nlohmann::json& j, const SearchResult& r);
void to_json(nlohmann::json& j, const FsPoint& p);
void to_json(nlohmann::json& j, const A6Exploration& e);
/// Columns restart,incumbent.
std::string history_csv(const SearchResult& r);

}  // namespace gsg
