#pragma once

#include <json.hpp>

#include "gsg/poly.hpp"
#include "gsg/rational.hpp"
#include "gsg/series.hpp"

namespace gsg {

/// Exact rationals serialize as "num/den" strings, complex values as
/// [re, im] pairs.
inline nlohmann::json coeff_to_json(const Rational& q) { return to_string(q); }
inline nlohmann::json coeff_to_json(const Complex& c) { return nlohmann::json::array({c.real(), c.imag()}); }
inline nlohmann::json coeff_to_json(const Poly& p) { return p.to_string(); }

template <class R>
nlohmann::json series_to_json(const Series<R>& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const R& c : s.coeffs()) out.push_back(coeff_to_json(c));
  return out;
}

}  // namespace gsg
