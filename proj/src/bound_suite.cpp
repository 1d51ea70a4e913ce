#include "gsg/bound_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gsg/kernels.hpp"
#include "gsg/sg_class.hpp"

namespace gsg {

namespace {

constexpr std::size_t kBatch = 1024;

struct Check {
  std::string name;
  double bound;
  double max_value = 0.0;
};

}  // namespace

BoundSuiteReport verify_bounds(std::size_t samples, std::uint64_t seed) {
  std::vector<Check> checks;
  std::vector<FunctionalId> ids;
  for (const BoundRecord& rec : bounds_table()) {
    if (rec.status != BoundStatus::proven) continue;
    checks.push_back({std::string(functional_name(rec.id)), to_double(rec.bound)});
    ids.push_back(rec.id);
  }
  const std::size_t fs_first = checks.size();
  for (auto [n, d] : kSuiteFsMu) {
    const Rational mu = rat(n, d);
    checks.push_back({"fs(mu=" + to_string(mu) + ")", to_double(fekete_szego_bound(mu))});
  }
  const std::size_t db_first = checks.size();
  for (int n = 1; n <= 4; ++n) checks.push_back({"debranges_" + std::to_string(n), 0.0});
  const std::size_t lw_first = checks.size();
  for (int n = 2; n <= 4; ++n)
    checks.push_back({"lowner_A" + std::to_string(n), static_cast<double>(lowner_bound(n))});

  BoundSuiteReport report{samples, seed, {}, {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> count_dist(1, kSuiteMaxAtoms);

  auto observe = [&](std::size_t c, std::size_t sample, double value, double bound) {
    checks[c].max_value = std::max(checks[c].max_value, value);
    if (value > bound + kBoundSlack) report.violations.push_back({checks[c].name, sample, value, bound});
  };

  std::vector<double> w, cs, sn, re, im;
  for (std::size_t start = 0; start < samples; start += kBatch) {
    const std::size_t m = std::min(kBatch, samples - start);
    w.assign(kSuiteMaxAtoms * m, 0.0);
    cs.assign(kSuiteMaxAtoms * m, 1.0);
    sn.assign(kSuiteMaxAtoms * m, 0.0);
    for (std::size_t s = 0; s < m; ++s) {
      const int k = count_dist(rng);
      double total = 0.0;
      for (int a = 0; a < k; ++a) {
        const double t = -std::log1p(-unit(rng));
        const double th = 2.0 * std::numbers::pi * unit(rng);
        w[a * m + s] = t;
        cs[a * m + s] = std::cos(th);
        sn[a * m + s] = std::sin(th);
        total += t;
      }
      for (int a = 0; a < k; ++a) w[a * m + s] /= total;
    }
    re.assign(5 * m, 0.0);
    im.assign(5 * m, 0.0);
    kernels::herglotz_moments({m, kSuiteMaxAtoms, w, cs, sn}, re, im);

    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t sample = start + s;
      std::array<Complex, 5> p;
      for (std::size_t n = 0; n < 5; ++n) p[n] = {re[n * m + s], im[n * m + s]};
      const CoeffSet c = coeffs_from_p(p);
      for (std::size_t i = 0; i < ids.size(); ++i) observe(i, sample, functional_magnitude(ids[i], c), checks[i].bound);
      for (std::size_t i = 0; i < kSuiteFsMu.size(); ++i) {
        const double mu = static_cast<double>(kSuiteFsMu[i].first) / static_cast<double>(kSuiteFsMu[i].second);
        observe(fs_first + i, sample, functional_magnitude(FunctionalId::fekete_szego, c, {mu, 0.0}),
                checks[fs_first + i].bound);
      }
      for (int n = 1; n <= 4; ++n) {
        const DeBrangesResult d = debranges_check(c.beta, n);
        const std::size_t idx = db_first + static_cast<std::size_t>(n - 1);
        checks[idx].bound = d.rhs;
        checks[idx].max_value = std::max(checks[idx].max_value, d.lhs);
        if (!d.holds) report.violations.push_back({checks[idx].name, sample, d.lhs, d.rhs});
      }
      for (std::size_t n = 0; n < 3; ++n) observe(lw_first + n, sample, std::abs(c.inv[n]), checks[lw_first + n].bound);
    }
  }

  for (const Check& c : checks) report.observations.push_back({c.name, c.max_value, c.bound});
  return report;
}

void to_json(nlohmann::json& j, const BoundSuiteReport& r) {
  nlohmann::json obs = nlohmann::json::array();
  for (const auto& o : r.observations)
    obs.push_back({{"name", o.name}, {"max_value", o.max_value}, {"bound", o.bound}, {"margin", o.bound - o.max_value}});
  nlohmann::json viol = nlohmann::json::array();
  for (const auto& v : r.violations)
    viol.push_back({{"name", v.name}, {"sample", v.sample}, {"value", v.value}, {"bound", v.bound}});
  j = nlohmann::json{{"samples", r.samples}, {"seed", r.seed}, {"observations", obs}, {"violations", viol}};
}

}  // namespace gsg
