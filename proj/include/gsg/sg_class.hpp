#pragma once

// Members of the class of normalized f with z f'(z) / f(z) subordinate to
// Psi(z) = z / ln(1 + z).

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsg/gregory.hpp"
#include "gsg/json_io.hpp"
#include "gsg/series.hpp"

namespace gsg {

template <class R>
struct SGFunction {
  Series<R> f;             ///< f[0] = 0, f[1] = 1
  Series<R> w;             ///< Schwarz function with z f'/f = Psi(w)
  std::string provenance;  ///< "f3", "atoms", ...
};

/// z f'(z) / f(z) = f'(z) / (f(z) / z). Order drops by one.
template <class R>
Series<R> log_derivative(const Series<R>& f) {
  using T = RingTraits<R>;
  if (f.order() < 1 || !T::is_zero(f[0]) || !T::is_zero(f[1] - T::one()))
    throw SeriesError("log_derivative: f must satisfy f(0) = 0, f'(0) = 1");
  return ps_div(derivative(f), divide_by_z(f));
}

/// f = z exp( integral_0^z (Psi(w(t)) - 1) / t dt ), the solution of
/// z f'/f = Psi(w). Coefficients of f through z^n_max only involve w through
/// z^(n_max - 1), so w must have at least that order; the stored w is
/// truncated there.
template <class R>
SGFunction<R> f_from_w(const Series<R>& w, int n_max, std::string provenance = "w") {
  if (n_max < 1) throw std::invalid_argument("f_from_w: n_max must be >= 1");
  if (!RingTraits<R>::is_zero(w[0])) throw SeriesError("f_from_w: w(0) must be 0");
  if (w.order() < n_max - 1) throw SeriesError("f_from_w: w is truncated below the requested order");
  const int m = n_max - 1;
  std::vector<R> wc(w.coeffs().begin(), w.coeffs().begin() + m + 1);
  wc[0] = RingTraits<R>::zero();
  const Series<R> wt(std::move(wc));
  const Series<R> psi_w = ps_compose(psi_series<R>(m), wt);
  const Series<R> integrand = psi_w - Series<R>::one(m);
  const Series<R> f = multiply_by_z(ps_exp(ps_integrate_over_t(integrand)));
  return {f, wt, std::move(provenance)};
}

/// log_derivative(f) - Psi(w); vanishes through its order for class members.
template <class R>
Series<R> membership_residual(const SGFunction<R>& g) {
  const Series<R> lhs = log_derivative(g.f);
  const Series<R> rhs = ps_compose(psi_series<R>(g.w.order()), g.w);
  return lhs - rhs;
}

/// The extremal functions f_i built from w = z^i, i in 1..5.
template <class R>
SGFunction<R> extremal_f(int i, int n_max = kDefaultOrder) {
  if (i < 1 || i > 5) throw std::out_of_range("extremal_f: index must be in 1..5");
  const Series<R> w = Series<R>::monomial(i, RingTraits<R>::one(), n_max);
  return f_from_w(w, n_max, "f" + std::to_string(i));
}

/// a_2..a_6 as polynomials in p_1..p_5 (closed forms).
template <class R>
std::array<R, 5> a_from_p(const std::array<R, 5>& p) {
  auto q = [](long n, long d) { return ring_frac<R>(n, d); };
  const R& p1 = p[0];
  const R& p2 = p[1];
  const R& p3 = p[2];
  const R& p4 = p[3];
  const R& p5 = p[4];
  const R p1_2 = p1 * p1;
  const R p1_3 = p1_2 * p1;
  const R p1_4 = p1_3 * p1;
  const R p1_5 = p1_4 * p1;
  const R p2_2 = p2 * p2;

  R a2 = q(1, 4) * p1;
  R a3 = q(1, 24) * (q(-1, 1) * p1_2 + q(3, 1) * p2);
  R a4 = q(1, 288) * (q(4, 1) * p1_3 - q(19, 1) * p1 * p2 + q(24, 1) * p3);
  R a5 = q(-1, 16) *
         (q(71, 720) * p1_4 + q(11, 24) * p2_2 + q(5, 6) * p1 * p3 - q(85, 144) * p1_2 * p2 - p4);
  R a6 = q(1, 691200) * (q(2267, 1) * p1_5 - q(15677, 1) * p1_3 * p2 + q(21720, 1) * p1_2 * p3 +
                         q(23370, 1) * p2_2 * p1 - q(29520, 1) * p1 * p4 - q(33120, 1) * p2 * p3 +
                         q(34560, 1) * p5);
  return {a2, a3, a4, a5, a6};
}

/// a_2..a_n of f (n = order).
template <class R>
std::vector<R> taylor_a(const Series<R>& f) {
  return std::vector<R>(f.coeffs().begin() + 2, f.coeffs().end());
}

template <class R>
nlohmann::json to_json(const SGFunction<R>& g) {
  return {{"provenance", g.provenance}, {"coeffs_f", series_to_json(g.f)}, {"coeffs_w", series_to_json(g.w)}};
}

}  // namespace gsg
