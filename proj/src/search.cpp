#include "gsg/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gsg/json_io.hpp"
#include "gsg/sg_class.hpp"

namespace gsg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInitialStep = 0.5;
constexpr double kFinalStep = 1e-6;

// Euclidean projection onto the probability simplex.
void project_to_simplex(std::vector<double>& v) {
  std::vector<double> u(v);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0;
  double shift = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    cum += u[i];
    const double t = (cum - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) shift = t;
  }
  for (double& x : v) x = std::max(0.0, x - shift);
}

struct Candidate {
  std::vector<double> t;
  std::vector<double> theta;
};

double evaluate(FunctionalId id, const Candidate& c, Complex mu) {
  std::array<Complex, 5> p{};
  for (std::size_t k = 0; k < c.t.size(); ++k) {
    const Complex u = std::polar(1.0, c.theta[k]);
    Complex un = u;
    for (auto& pn : p) {
      pn += 2.0 * c.t[k] * un;
      un *= u;
    }
  }
  return functional_magnitude(id, coeffs_from_p(p), mu);
}

struct RestartOutcome {
  double value;
  Candidate best;
};

RestartOutcome run_restart(const SearchConfig& cfg, Complex mu, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const auto k = static_cast<std::size_t>(cfg.atom_count);
  Candidate x{std::vector<double>(k), std::vector<double>(k)};
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    x.t[i] = -std::log1p(-unit(rng));
    total += x.t[i];
  }
  for (std::size_t i = 0; i < k; ++i) {
    x.t[i] /= total;
    x.theta[i] = kTwoPi * unit(rng);
  }

  double fx = evaluate(cfg.functional, x, mu);
  double step = kInitialStep;
  for (int sweep = 0; sweep < cfg.refine_iters && step >= kFinalStep; ++sweep) {
    bool improved = false;
    for (std::size_t coord = 0; coord < 2 * k; ++coord) {
      for (double dir : {1.0, -1.0}) {
        Candidate y = x;
        if (coord < k) {
          y.t[coord] += dir * step;
          project_to_simplex(y.t);
        } else {
          y.theta[coord - k] += dir * step;
        }
        const double fy = evaluate(cfg.functional, y, mu);
        if (fy > fx) {
          x = std::move(y);
          fx = fy;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  for (double& th : x.theta) {
    th = std::fmod(th, kTwoPi);
    if (th < 0.0) th += kTwoPi;
  }
  return {fx, std::move(x)};
}

HerglotzAtoms to_atoms(const Candidate& c) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < c.t.size(); ++i) atoms.push_back({c.t[i], c.theta[i]});
  return HerglotzAtoms(std::move(atoms));
}

}  // namespace

unsigned search_thread_count() {
  if (const char* env = std::getenv("GSG_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double search_objective(FunctionalId id, const HerglotzAtoms& atoms, Complex mu) {
  Candidate c;
  for (const Atom& a : atoms.atoms()) {
    c.t.push_back(a.weight);
    c.theta.push_back(a.theta);
  }
  return evaluate(id, c, mu);
}

SearchResult maximize(const SearchConfig& cfg) {
  if (cfg.atom_count < 1) throw std::invalid_argument("maximize: atom_count must be >= 1");
  if (cfg.restarts < 1) throw std::invalid_argument("maximize: restarts must be >= 1");
  if (cfg.refine_iters < 0) throw std::invalid_argument("maximize: refine_iters must be >= 0");

  const Complex mu = cfg.mu.value_or(Complex{0.0, 0.0});
  double bound = 0.0;
  std::optional<Rational> bound_exact;
  std::string note;
  if (cfg.functional == FunctionalId::fekete_szego) {
    bound = fekete_szego_bound(mu);
    if (mu.imag() == 0.0) bound_exact = fekete_szego_bound(from_double(mu.real()));
  } else {
    const BoundRecord& rec = lookup_bound(cfg.functional);
    bound_exact = rec.bound;
    bound = to_double(rec.bound);
    note = rec.note;
  }

  std::vector<std::optional<RestartOutcome>> outcomes(static_cast<std::size_t>(cfg.restarts));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < cfg.restarts; r = next++) outcomes[static_cast<std::size_t>(r)] = run_restart(cfg, mu, r);
  };
  const unsigned threads = std::min<unsigned>(search_thread_count(), static_cast<unsigned>(cfg.restarts));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::size_t best = 0;
  std::vector<std::pair<int, double>> history;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    if (outcomes[r]->value > outcomes[best]->value) best = r;
    history.emplace_back(static_cast<int>(r), outcomes[best]->value);
  }
  const double best_value = outcomes[best]->value;
  return SearchResult{cfg.functional, mu,    best_value, to_atoms(outcomes[best]->best), bound,
                      bound_exact,    bound - best_value, note, std::move(history)};
}

std::vector<FsPoint> fs_sweep(const std::vector<Rational>& mu_values, const SearchConfig& cfg) {
  if (mu_values.empty()) throw std::invalid_argument("fs_sweep: empty mu grid");
  std::vector<FsPoint> out;
  for (const Rational& mu : mu_values) {
    SearchConfig c = cfg;
    c.functional = FunctionalId::fekete_szego;
    c.mu = Complex{to_double(mu), 0.0};
    const SearchResult r = maximize(c);
    const Rational bound = fekete_szego_bound(mu);
    out.push_back({mu, r.best_value, bound, to_double(bound) - r.best_value});
  }
  return out;
}

A6Exploration a6_explore(SearchConfig cfg) {
  cfg.functional = FunctionalId::a6;
  cfg.atom_count = std::max(cfg.atom_count, 6);
  SearchResult r = maximize(cfg);
  const Rational conj = lookup_bound(FunctionalId::a6, BoundStatus::conjectured).bound;
  const double gap_conj = to_double(conj) - r.best_value;
  return {std::move(r), conj, gap_conj};
}

void to_json(nlohmann::json& j, const SearchResult& r) {
  j = nlohmann::json{{"functional", functional_name(r.functional)},
                     {"mu", {r.mu.real(), r.mu.imag()}},
                     {"best_value", r.best_value},
                     {"best_atoms", r.best_atoms},
                     {"bound", r.bound_exact ? nlohmann::json(to_string(*r.bound_exact)) : nlohmann::json(nullptr)},
                     {"bound_value", r.bound},
                     {"gap", r.gap},
                     {"note", r.note}};
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [i, v] : r.history) hist.push_back({i, v});
  j["history"] = std::move(hist);
}

void to_json(nlohmann::json& j, const FsPoint& p) {
  j = nlohmann::json{{"mu", to_string(p.mu)},
                     {"best_value", p.best_value},
                     {"bound", to_string(p.bound)},
                     {"bound_value", to_double(p.bound)},
                     {"gap", p.gap}};
}

void to_json(nlohmann::json& j, const A6Exploration& e) {
  j = e.result;
  j["proven_bound"] = j["bound"];
  j["gap_proven"] = e.result.gap;
  j["conjectured_bound"] = to_string(e.conjectured_bound);
  j["gap_conjectured"] = e.gap_conjectured;
}

std::string history_csv(const SearchResult& r) {
  std::ostringstream os;
  os.precision(17);
  os << "restart,incumbent\n";
  for (const auto& [i, v] : r.history) os << i << ',' << v << '\n';
  return os.str();
}

}  // namespace gsg
