#include <doctest.h>

#include "gsg/derive.hpp"
#include "gsg/functionals.hpp"
#include "gsg/sg_class.hpp"
#include "test_support.hpp"

using namespace gsg;

TEST_CASE("derive: every closed form agrees with the symbolic derivation") {
  const DerivationReport r = derive_formulas();
  CHECK(r.checks.size() >= 30);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.agrees, (c.name + ": " + c.derived.to_string()));
  CHECK(r.all_agree());
}

TEST_CASE("derive: beta_4 constant") {
  const Beta4Resolution b = derive_formulas().beta4;
  CHECK(b.derived_p4_coefficient == rat(1, 32));
  CHECK(b.factored_p4_coefficient == rat(1, 32));
  CHECK(b.resolved_constant == 2880);
  CHECK(b.printed_constant == 2280);
  CHECK_FALSE(b.printed_consistent);
  CHECK(b.factored_consistent);
}

TEST_CASE("derive: derived polynomials evaluate to the numeric route") {
  // Finite-algebra oracle: evaluate a derived polynomial at the moments of a
  // random configuration and compare with the complex series pipeline.
  const DerivationReport r = derive_formulas();
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto atoms = gsg::testing::random_atoms(rng);
    const auto p = p_moments(atoms);
    const CoeffSet s = coeffs_from_atoms_series(atoms);
    for (const auto& c : r.checks) {
      if (c.variables != "p") continue;
      if (c.name == "a6") CHECK(std::abs(c.derived.evaluate(p) - s.a[4]) < 1e-9);
      if (c.name == "beta4") CHECK(std::abs(c.derived.evaluate(p) - s.beta[3]) < 1e-12);
      if (c.name == "A4") CHECK(std::abs(c.derived.evaluate(p) - s.inv[2]) < 1e-12);
    }
  }
}

TEST_CASE("derive: JSON report") {
  const nlohmann::json j = to_json(derive_formulas());
  CHECK(j["all_agree"] == true);
  CHECK(j["beta4_resolution"]["resolved_constant"] == 2880);
}
