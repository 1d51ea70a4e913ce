#include <doctest.h>

#include <set>

#include "gsg/functionals.hpp"
#include "gsg/lemmas.hpp"
#include "gsg/sg_class.hpp"
#include "test_support.hpp"

using namespace gsg;

TEST_CASE("lemmas: three-term inequality") {
  const Complex two(2.0);
  // Q = 1/2, R = 1/4: |2 - 4 + 2| = 0.
  const auto v = lemma2_25(two, two, two, 0.5, 0.25);
  CHECK(v.applicable);
  CHECK(std::abs(v.value) < 1e-15);
  // Q = 7/12 needs R >= Q(2Q - 1) = 7/72.
  CHECK_FALSE(lemma2_25(two, two, two, 7.0 / 12.0, 0.09).applicable);
  CHECK(lemma2_25(two, two, two, 7.0 / 12.0, 0.0973).applicable);
  CHECK_FALSE(lemma2_25(two, two, two, 1.5, 1.0).applicable);

  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = p_moments(gsg::testing::random_atoms(rng));
    const double q = unit(rng);
    const double lo = q * (2.0 * q - 1.0);
    const double r = lo + (q - lo) * unit(rng);
    const auto x = lemma2_25(p[0], p[1], p[2], q, r);
    REQUIRE(x.applicable);
    CHECK(x.value <= 2.0 + 1e-12);
  }
}

TEST_CASE("lemmas: generalized Fekete-Szego for the Caratheodory class") {
  const auto x = lemma2_26(2.0, 2.0, 2.0, 1.0 / 3.0);
  CHECK(std::abs(x.value - 2.0 / 3.0) < 1e-15);
  CHECK(x.bound == 2.0);
  CHECK(lemma2_26(0.0, 0.0, 0.0, 2.0).bound == 6.0);
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = p_moments(gsg::testing::random_atoms(rng));
    for (double mu : {-1.0, 0.0, 0.5, 1.0, 3.0}) {
      const auto a = lemma2_26(p[0], p[0], p[1], mu);
      const auto b = lemma2_26(p[0], p[1], p[2], mu);
      CHECK(a.value <= a.bound + 1e-12);
      CHECK(b.value <= b.bound + 1e-12);
    }
  }
}

TEST_CASE("lemmas: four-parameter condition") {
  const Lemma3Params log4{7.0 / 12.0, 17.0 / 24.0, 649.0 / 2880.0, 7.0 / 12.0};
  const auto c = lemma3_condition(log4);
  CHECK(std::abs(c.lhs - 0.00442226) < 5e-6);
  CHECK(std::abs(c.rhs - 0.057435) < 5e-6);
  CHECK(c.holds);
  CHECK(lemma3_condition({5.0 / 12.0, 85.0 / 216.0, 71.0 / 720.0, 11.0 / 24.0}).holds);
  CHECK_FALSE(lemma3_condition({0.5, 2.0, 0.0, 0.5}).holds);
  CHECK_THROWS_AS(lemma3_condition({1.0, 0.0, 0.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(lemma3_condition({0.5, 0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("lemmas: four-parameter functional") {
  const Lemma3Params log4{7.0 / 12.0, 17.0 / 24.0, 649.0 / 2880.0, 7.0 / 12.0};
  CHECK(lemma3_value(0.0, 0.0, 0.0, 0.0, log4) == 0.0);
  CHECK(lemma3_value(0.0, 0.0, 0.0, 2.0, log4) == 2.0);
  // 649/180 + 7/3 + 14/3 - 17/2 - 2 = 19/180.
  CHECK(std::abs(lemma3_value(2.0, 2.0, 2.0, 2.0, log4) - 19.0 / 180.0) < 1e-14);

  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = p_moments(gsg::testing::random_atoms(rng).normalized());
    CHECK(p[0].real() >= -1e-12);
    CHECK(lemma3_value(p[0], p[1], p[2], p[3], log4) <= 2.0 + 1e-12);
  }
}

TEST_CASE("lemmas: Y closed form examples") {
  CHECK(y_value({1, 2, 1}) == 4.0);
  CHECK(y_value_detailed({1, 2, 1}).branch == YBranch::sum_abs);
  CHECK(y_value({0, 0, 0}) == 1.0);
  CHECK(y_value_detailed({0, 0, 0}).branch == YBranch::interior);
  CHECK(std::abs(y_value({0, -1.0 / 24.0, -13.0 / 8.0}) - 5.0 / 3.0) < 1e-15);
}

TEST_CASE("lemmas: Y symmetries and lower bound") {
  std::mt19937_64 rng(64);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const double y = y_value({a, b, c});
    CHECK(y == y_value({a, -b, c}));
    CHECK(y == y_value({-a, b, -c}));
    CHECK(y >= 1.0 + std::abs(a) - 1e-12);
    CHECK(y >= std::max(std::abs(a + b + c), std::abs(a - b + c)) - 1e-12);
  }
}

TEST_CASE("lemmas: Y closed form against an independent dense grid") {
  std::mt19937_64 rng(65);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::set<YBranch> seen;
  int checked = 0;
  for (int trial = 0; trial < 4000 && (seen.size() < 7 || checked < 25); ++trial) {
    const YParams p{u(rng), u(rng), u(rng)};
    const auto y = y_value_detailed(p);
    if (seen.count(y.branch) && checked >= 25) continue;
    seen.insert(y.branch);
    ++checked;
    CHECK(std::abs(y.value - gsg::testing::y_dense_grid(p.a, p.b, p.c, 300)) < 2e-2);
    CHECK(std::abs(y.value - y_oracle(p)) < 2e-3);
  }
  CHECK(seen.size() >= 5);
}

TEST_CASE("lemmas: Y oracle") {
  CHECK(std::abs(y_oracle({1, 2, 1}) - 4.0) < 1e-6);
  CHECK(std::abs(y_oracle({0, 0, 0}) - 1.0) < 1e-9);
  CHECK_THROWS_AS(y_oracle({1, 1, 1}, 32), std::invalid_argument);
  const auto r = y_oracle_detailed({1, 2, 1}, 128);
  CHECK(std::abs(r.argmax - Complex(1.0)) < 1e-6);
  std::mt19937_64 rng(66);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const YParams p{u(rng), u(rng), u(rng)};
    const double y = y_value(p);
    const double o = y_oracle(p);
    CHECK(o <= y + 1e-6);
    CHECK(y - o <= 1e-3);
  }
}

TEST_CASE("lemmas: proof curves") {
  const auto h0 = max_on_interval(CurveId::H0, 0.0, 4.0);
  CHECK(std::abs(h0.value - 1.0 / 16.0) < 1e-12);
  CHECK(h0.argmax == 0.0);
  CHECK_FALSE(h0.attained);
  const auto c1 = max_on_interval(CurveId::C1_curve, 0.0, 0.75);
  CHECK(std::abs(c1.value - 2581.0 / 12288.0) < 1e-12);
  const auto c4 = max_on_interval(CurveId::C4_curve, 0.75, c4_interval_end(), Closure::closed);
  CHECK(std::abs(c4.value - (3968.0 / 1203.0) * std::sqrt(5.0 / 1203.0)) < 1e-12);
  CHECK(c4.attained);
  const auto h1 = max_on_interval(CurveId::H1, c4_interval_end(), 2.0);
  CHECK(std::abs(h1.value - 31.0 / 72.0) < 1e-12);
  CHECK_FALSE(h1.attained);
  // An interior maximum: C4 peaks at sqrt(208/249) on a wider interval.
  const auto wide = max_on_interval(CurveId::C4_curve, 0.0, 1.5);
  CHECK(std::abs(wide.argmax - std::sqrt(208.0 / 249.0)) < 1e-6);
  CHECK(wide.attained);
  CHECK_THROWS_AS(max_on_interval(CurveId::H0, 1.0, 1.0), std::invalid_argument);
  CHECK(parse_curve("H1") == CurveId::H1);
  CHECK_THROWS_AS(parse_curve("H2"), std::invalid_argument);
}
