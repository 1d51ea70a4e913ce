#include <doctest.h>

#include <cstdlib>

#include "gsg/search.hpp"

using namespace gsg;

namespace {

SearchConfig small(FunctionalId id, std::uint64_t seed = 1) {
  SearchConfig cfg;
  cfg.functional = id;
  cfg.restarts = 8;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("search: objective at known configurations") {
  const HerglotzAtoms z2({{0.5, 0.0}, {0.5, std::numbers::pi}});
  CHECK(std::abs(search_objective(FunctionalId::a3, z2) - 0.25) < 1e-14);
  CHECK(std::abs(search_objective(FunctionalId::a2, HerglotzAtoms({{1.0, 0.0}})) - 0.5) < 1e-15);
  std::vector<Atom> z5;
  for (int k = 0; k < 5; ++k) z5.push_back({0.2, 2.0 * std::numbers::pi * k / 5});
  CHECK(std::abs(search_objective(FunctionalId::a6, HerglotzAtoms(z5)) - 0.1) < 1e-14);
  // Six equal atoms give w = z^6, so a6 vanishes.
  std::vector<Atom> z6;
  for (int k = 0; k < 6; ++k) z6.push_back({1.0 / 6.0, 2.0 * std::numbers::pi * k / 6});
  CHECK(search_objective(FunctionalId::a6, HerglotzAtoms(z6)) < 1e-14);
}

TEST_CASE("search: reaches sharp bounds on small budgets") {
  for (FunctionalId id : {FunctionalId::a2, FunctionalId::a3, FunctionalId::beta2, FunctionalId::h22}) {
    const SearchResult r = maximize(small(id));
    CHECK_MESSAGE(r.gap < 1e-3, functional_name(id));
    CHECK(r.best_value <= r.bound + 1e-6);
    REQUIRE(r.bound_exact.has_value());
    CHECK(r.bound == to_double(*r.bound_exact));
  }
}

TEST_CASE("search: never exceeds proven bounds across seeds") {
  for (std::uint64_t seed : {1u, 2u, 3u})
    for (FunctionalId id : all_functionals()) {
      if (id == FunctionalId::fekete_szego) continue;
      SearchConfig cfg = small(id, seed);
      cfg.restarts = 4;
      const SearchResult r = maximize(cfg);
      CHECK_MESSAGE(r.best_value <= r.bound + 1e-6, functional_name(id));
    }
}

TEST_CASE("search: deterministic and independent of thread count") {
  SearchConfig cfg = small(FunctionalId::a4, 99);
  setenv("GSG_THREADS", "1", 1);
  const SearchResult a = maximize(cfg);
  setenv("GSG_THREADS", "4", 1);
  const SearchResult b = maximize(cfg);
  unsetenv("GSG_THREADS");
  REQUIRE(a.history.size() == b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i) {
    CHECK(a.history[i].first == b.history[i].first);
    CHECK(a.history[i].second == b.history[i].second);
  }
  CHECK(a.best_value == b.best_value);
  for (std::size_t k = 0; k < a.best_atoms.size(); ++k) CHECK(a.best_atoms.atoms()[k].theta == b.best_atoms.atoms()[k].theta);
  const SearchResult c = maximize(small(FunctionalId::a4, 100));
  CHECK(c.history != a.history);
}

TEST_CASE("search: history is a nondecreasing incumbent trace") {
  const SearchResult r = maximize(small(FunctionalId::beta3));
  REQUIRE(r.history.size() == 8);
  for (std::size_t i = 1; i < r.history.size(); ++i) CHECK(r.history[i].second >= r.history[i - 1].second);
  CHECK(r.history.back().second == r.best_value);
  const std::string csv = history_csv(r);
  CHECK(csv.rfind("restart,incumbent\n", 0) == 0);
}

TEST_CASE("search: configuration errors") {
  SearchConfig cfg;
  cfg.atom_count = 0;
  CHECK_THROWS_AS(maximize(cfg), std::invalid_argument);
  cfg = SearchConfig{};
  cfg.restarts = 0;
  CHECK_THROWS_AS(maximize(cfg), std::invalid_argument);
  CHECK_THROWS_AS(fs_sweep({}, SearchConfig{}), std::invalid_argument);
}

TEST_CASE("search: Fekete-Szego sweep") {
  SearchConfig cfg;
  cfg.restarts = 8;
  const auto pts = fs_sweep({rat(0), rat(1, 3), rat(3)}, cfg);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].bound == rat(1, 4));
  CHECK(pts[2].bound == rat(2, 3));
  for (const auto& p : pts) {
    CHECK(p.gap > -1e-6);
    CHECK(p.gap < 1e-3);
  }
}

TEST_CASE("search: a6 exploration") {
  SearchConfig cfg;
  cfg.restarts = 8;
  cfg.atom_count = 2;
  const A6Exploration e = a6_explore(cfg);
  CHECK(e.result.best_atoms.size() == 6);
  CHECK(e.conjectured_bound == rat(1, 10));
  CHECK(e.result.bound_exact == rat(13, 48));
  CHECK(e.result.best_value <= 13.0 / 48.0 + 1e-6);
  CHECK(std::abs(e.gap_conjectured - (0.1 - e.result.best_value)) < 1e-15);
  const nlohmann::json j = e;
  CHECK(j["conjectured_bound"] == "1/10");
  CHECK(j["proven_bound"] == "13/48");
}

TEST_CASE("search: thread count from the environment") {
  setenv("GSG_THREADS", "3", 1);
  CHECK(search_thread_count() == 3);
  setenv("GSG_THREADS", "junk", 1);
  CHECK(search_thread_count() >= 1);
  unsetenv("GSG_THREADS");
}
