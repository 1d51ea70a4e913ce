#pragma once

// Truncated power series c0 + c1 z + ... + cN z^N over a coefficient ring.
//
// Every operation returns a series whose order is the largest N for which
// all coefficients are determined by the inputs. For binary operations that
// is the minimum of the operand orders; there is no implicit zero padding.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsg/ring.hpp"

namespace gsg {

struct SeriesError : std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr int kDefaultOrder = 12;

template <class R>
class Series {
 public:
  using Ring = R;
  using Traits = RingTraits<R>;

  /// coeffs[n] is the coefficient of z^n; order = coeffs.size() - 1.
  explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw SeriesError("series needs at least a constant term");
  }

  static Series zero(int order) { return Series(std::vector<R>(checked(order) + 1, Traits::zero())); }
  static Series constant(R c, int order) {
    std::vector<R> v(checked(order) + 1, Traits::zero());
    v[0] = std::move(c);
    return Series(std::move(v));
  }
  static Series one(int order) { return constant(Traits::one(), order); }
  /// c z^degree, zero when degree > order.
  static Series monomial(int degree, R c, int order) {
    std::vector<R> v(checked(order) + 1, Traits::zero());
    if (degree < 0) throw SeriesError("negative monomial degree");
    if (degree <= order) v[degree] = std::move(c);
    return Series(std::move(v));
  }
  /// The series z.
  static Series identity(int order) { return monomial(1, Traits::one(), order); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  std::span<const R> coeffs() const { return c_; }

  Series truncated(int order) const {
    if (order < 0 || order > this->order())
      throw SeriesError("cannot truncate order " + std::to_string(this->order()) + " series to order " +
                        std::to_string(order));
    return Series(std::vector<R>(c_.begin(), c_.begin() + order + 1));
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  static std::size_t checked(int order) {
    if (order < 0) throw SeriesError("negative series order");
    return static_cast<std::size_t>(order);
  }

  std::vector<R> c_;
};

namespace detail {

template <class R>
int common_order(const Series<R>& a, const Series<R>& b) {
  return std::min(a.order(), b.order());
}

template <class R>
R div_int(const R& x, long n) {
  R inv = RingTraits<R>::inverse(RingTraits<R>::from_int(n));
  return x * inv;
}

}  // namespace detail

template <class R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) {
  const int n = detail::common_order(a, b);
  std::vector<R> out;
  out.reserve(n + 1);
  for (int k = 0; k <= n; ++k) out.push_back(a[k] + b[k]);
  return Series<R>(std::move(out));
}

template <class R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) {
  const int n = detail::common_order(a, b);
  std::vector<R> out;
  out.reserve(n + 1);
  for (int k = 0; k <= n; ++k) out.push_back(a[k] - b[k]);
  return Series<R>(std::move(out));
}

template <class R>
Series<R> operator-(const Series<R>& a) {
  std::vector<R> out;
  out.reserve(a.order() + 1);
  for (const R& c : a.coeffs()) out.push_back(-c);
  return Series<R>(std::move(out));
}

template <class R>
Series<R> scale(const Series<R>& a, const R& s) {
  std::vector<R> out;
  out.reserve(a.order() + 1);
  for (const R& c : a.coeffs()) out.push_back(c * s);
  return Series<R>(std::move(out));
}

/// Cauchy product truncated at min(order(a), order(b)).
template <class R>
Series<R> ps_mul(const Series<R>& a, const Series<R>& b) {
  const int n = detail::common_order(a, b);
  std::vector<R> out(n + 1, RingTraits<R>::zero());
  for (int i = 0; i <= n; ++i) {
    if (a[i] == RingTraits<R>::zero()) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return Series<R>(std::move(out));
}

template <class R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) {
  return ps_mul(a, b);
}

/// a / b by long division; b[0] must be a unit.
template <class R>
Series<R> ps_div(const Series<R>& a, const Series<R>& b) {
  if (RingTraits<R>::is_zero(b[0])) throw SeriesError("ps_div: divisor has zero constant term");
  const R inv0 = RingTraits<R>::inverse(b[0]);
  const int n = detail::common_order(a, b);
  std::vector<R> q;
  q.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    R acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q.push_back(acc * inv0);
  }
  return Series<R>(std::move(q));
}

/// d/dz; order drops by one (a constant differentiates to the order-0 zero).
template <class R>
Series<R> derivative(const Series<R>& a) {
  if (a.order() == 0) return Series<R>::zero(0);
  std::vector<R> out;
  out.reserve(a.order());
  for (int k = 1; k <= a.order(); ++k) out.push_back(a[k] * RingTraits<R>::from_int(k));
  return Series<R>(std::move(out));
}

/// z * a; exact, so the order grows by one.
template <class R>
Series<R> multiply_by_z(const Series<R>& a) {
  std::vector<R> out;
  out.reserve(a.order() + 2);
  out.push_back(RingTraits<R>::zero());
  for (const R& c : a.coeffs()) out.push_back(c);
  return Series<R>(std::move(out));
}

/// a / z; requires a[0] == 0 and order >= 1.
template <class R>
Series<R> divide_by_z(const Series<R>& a) {
  if (!RingTraits<R>::is_zero(a[0])) throw SeriesError("divide_by_z: nonzero constant term");
  if (a.order() < 1) throw SeriesError("divide_by_z: order-0 series has no quotient");
  return Series<R>(std::vector<R>(a.coeffs().begin() + 1, a.coeffs().end()));
}

/// outer(inner(z)); inner[0] must vanish. Horner evaluation in the series
/// ring, truncated at min(order(outer), order(inner)).
template <class R>
Series<R> ps_compose(const Series<R>& outer, const Series<R>& inner) {
  if (!RingTraits<R>::is_zero(inner[0])) throw SeriesError("ps_compose: inner series has nonzero constant term");
  const int n = detail::common_order(outer, inner);
  std::vector<R> in(inner.coeffs().begin(), inner.coeffs().begin() + n + 1);
  in[0] = RingTraits<R>::zero();
  const Series<R> z_sub(std::move(in));
  Series<R> acc = Series<R>::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    acc = ps_mul(acc, z_sub);
    std::vector<R> v(acc.coeffs().begin(), acc.coeffs().end());
    v[0] += outer[k];
    acc = Series<R>(std::move(v));
  }
  return acc;
}

/// exp(g) for g[0] == 0 via n e_n = sum_{k=1..n} k g_k e_{n-k}.
template <class R>
Series<R> ps_exp(const Series<R>& g) {
  if (!RingTraits<R>::is_zero(g[0])) throw SeriesError("ps_exp: nonzero constant term");
  const int n = g.order();
  std::vector<R> e;
  e.reserve(n + 1);
  e.push_back(RingTraits<R>::one());
  for (int m = 1; m <= n; ++m) {
    R acc = RingTraits<R>::zero();
    for (int k = 1; k <= m; ++k) acc += g[k] * e[m - k] * RingTraits<R>::from_int(k);
    e.push_back(detail::div_int(acc, m));
  }
  return Series<R>(std::move(e));
}

/// log(g) for g[0] == 1 via n l_n = n g_n - sum_{k=1..n-1} k l_k g_{n-k}.
template <class R>
Series<R> ps_log(const Series<R>& g) {
  if (!RingTraits<R>::is_zero(g[0] - RingTraits<R>::one())) throw SeriesError("ps_log: constant term must be 1");
  const int n = g.order();
  std::vector<R> l;
  l.reserve(n + 1);
  l.push_back(RingTraits<R>::zero());
  for (int m = 1; m <= n; ++m) {
    R acc = g[m] * RingTraits<R>::from_int(m);
    for (int k = 1; k < m; ++k) acc -= l[k] * g[m - k] * RingTraits<R>::from_int(k);
    l.push_back(detail::div_int(acc, m));
  }
  return Series<R>(std::move(l));
}

/// Term-wise integral of g(t)/t from 0 to z: c_n z^n -> (c_n / n) z^n.
template <class R>
Series<R> ps_integrate_over_t(const Series<R>& g) {
  if (!RingTraits<R>::is_zero(g[0])) throw SeriesError("ps_integrate_over_t: nonzero constant term");
  std::vector<R> out;
  out.reserve(g.order() + 1);
  out.push_back(RingTraits<R>::zero());
  for (int k = 1; k <= g.order(); ++k) out.push_back(detail::div_int(g[k], k));
  return Series<R>(std::move(out));
}

/// Compositional inverse of f = z + f2 z^2 + ...
///
/// Builds g one degree at a time: with g correct through degree m-1, the
/// degree-m coefficient of f(g) equals g_m plus terms in lower coefficients,
/// so subtracting the residual fixes g_m.
template <class R>
Series<R> ps_revert(const Series<R>& f) {
  using T = RingTraits<R>;
  if (f.order() < 1) throw SeriesError("ps_revert: order must be at least 1");
  if (!T::is_zero(f[0])) throw SeriesError("ps_revert: f(0) must be 0");
  if (!T::is_zero(f[1] - T::one())) throw SeriesError("ps_revert: f'(0) must be 1");
  const int n = f.order();
  std::vector<R> g(n + 1, T::zero());
  g[1] = T::one();
  for (int m = 2; m <= n; ++m) {
    const Series<R> comp = ps_compose(f.truncated(m), Series<R>(std::vector<R>(g.begin(), g.begin() + m + 1)));
    g[m] -= comp[m];
  }
  return Series<R>(std::move(g));
}

/// Coefficient-wise ring change.
template <class To, class From, class Fn>
Series<To> convert(const Series<From>& s, Fn&& fn) {
  std::vector<To> out;
  out.reserve(s.order() + 1);
  for (const From& c : s.coeffs()) out.push_back(fn(c));
  return Series<To>(std::move(out));
}

/// log(1 + z) with coefficients (-1)^(n+1)/n.
template <class R>
Series<R> log1p_series(int order) {
  std::vector<R> c(order + 1, RingTraits<R>::zero());
  for (int k = 1; k <= order; ++k) c[k] = ring_frac<R>(k % 2 == 1 ? 1 : -1, k);
  return Series<R>(std::move(c));
}

}  // namespace gsg
