#include "gsg/gregory.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gsg {

GregoryTable gregory_coeffs(int n_max) {
  if (n_max < 0) throw std::invalid_argument("gregory_coeffs: n_max must be >= 0");
  // z / ln(1+z) = 1 / (ln(1+z) / z); the quotient series has constant term 1.
  const Series<Rational> log1p = log1p_series<Rational>(n_max + 1);
  const Series<Rational> psi = ps_div(Series<Rational>::one(n_max), divide_by_z(log1p));

  const Series<Rational> check = ps_mul(psi, log1p.truncated(n_max));
  const Series<Rational> z = Series<Rational>::identity(n_max);
  if (!(check == z)) throw std::logic_error("gregory_coeffs: psi * ln(1+z) != z");

  GregoryTable table;
  table.values.assign(psi.coeffs().begin(), psi.coeffs().end());
  return table;
}

Complex psi_on_circle(double theta, double guard) {
  const double pi = std::numbers::pi;
  double wrapped = std::remainder(theta, 2.0 * pi);  // in [-pi, pi]
  if (pi - std::abs(wrapped) <= guard)
    throw std::domain_error("psi_on_circle: angle within guard band of the singular point -1");
  const Complex z = std::polar(1.0, theta);
  return z / std::log(1.0 + z);
}

std::vector<CurvePoint> psi_boundary_curve(int samples, double guard) {
  if (samples < 3) throw std::invalid_argument("psi_boundary_curve: need at least 3 samples");
  const double pi = std::numbers::pi;
  std::vector<CurvePoint> out;
  out.reserve(samples);
  for (int j = 0; j < samples; ++j) {
    const double theta = -pi + 2.0 * pi * (j + 0.5) / samples;
    if (pi - std::abs(theta) <= guard) continue;
    const Complex v = psi_on_circle(theta, guard);
    out.push_back({theta, v.real(), v.imag()});
  }
  return out;
}

std::string curve_csv(const std::vector<CurvePoint>& points) {
  std::ostringstream os;
  os.precision(17);
  os << "theta,re,im\n";
  for (const auto& p : points) os << p.theta << ',' << p.re << ',' << p.im << '\n';
  return os.str();
}

}  // namespace gsg
