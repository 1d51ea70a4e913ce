#pragma once

// Exact symbolic re-derivation of the closed-form coefficient formulas.
//
// The Carathéodory series p = 1 + p1 z + ... + p5 z^5 is pushed through the
// series pipeline with coefficients in the polynomial ring Q[p1..p5]; the
// resulting polynomials are compared term-by-term with the closed forms used
// elsewhere in the library.

#include <string>
#include <vector>

#include <json.hpp>

#include "gsg/poly.hpp"

namespace gsg {

struct FormulaCheck {
  std::string name;
  /// "p" when the variables are p1..p5, "a" when they stand for a2..a6.
  std::string variables;
  Poly derived;
  Poly reference;
  bool agrees;
};

/// The p4 coefficient of beta_4 decides between the two published forms
/// -(... - 2280 p4)/92160 and -(1/32)(... - p4).
struct Beta4Resolution {
  Rational derived_p4_coefficient;
  Rational factored_p4_coefficient;  ///< 1/32 from the factored form
  long printed_constant;             ///< 2280
  long resolved_constant;            ///< derived coefficient * 92160
  bool printed_consistent;
  bool factored_consistent;
};

struct DerivationReport {
  std::vector<FormulaCheck> checks;
  Beta4Resolution beta4;
  bool all_agree() const;
};

DerivationReport derive_formulas();

nlohmann::json to_json(const DerivationReport& r);

}  // namespace gsg
