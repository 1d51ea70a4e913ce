#pragma once

#include <string>
#include <vector>

#include "gsg/rational.hpp"
#include "gsg/series.hpp"

namespace gsg {

/// Gregory coefficients G_0..G_N of z / ln(1 + z), exact.
struct GregoryTable {
  std::vector<Rational> values;
};

/// Computed by series long division and checked against
/// psi * ln(1+z) == z before returning.
GregoryTable gregory_coeffs(int n_max);

/// Psi(z) = z / ln(1 + z) = sum G_n z^n, truncated at n_max.
template <class R>
Series<R> psi_series(int n_max) {
  const GregoryTable g = gregory_coeffs(n_max);
  std::vector<R> c;
  c.reserve(g.values.size());
  for (const Rational& q : g.values) c.push_back(RingTraits<R>::from_rational(q));
  return Series<R>(std::move(c));
}

inline constexpr double kDefaultGuardBand = 1e-3;

/// Psi(e^{i theta}) by direct evaluation with the principal logarithm.
/// Throws std::domain_error within `guard` of the singular angle pi.
Complex psi_on_circle(double theta, double guard = kDefaultGuardBand);

struct CurvePoint {
  double theta;
  double re;
  double im;
};

/// Midpoint grid theta_j = -pi + 2 pi (j + 1/2) / samples, j < samples,
/// skipping angles inside the guard band around pi. The grid is symmetric
/// under theta -> -theta.
std::vector<CurvePoint> psi_boundary_curve(int samples, double guard = kDefaultGuardBand);

/// "theta,re,im" header plus one row per point, full double precision.
std::string curve_csv(const std::vector<CurvePoint>& points);

}  // namespace gsg
