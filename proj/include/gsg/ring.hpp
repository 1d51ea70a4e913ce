#pragma once

#include <cmath>
#include <stdexcept>

#include "gsg/rational.hpp"

namespace gsg {

/// Coefficient-ring adapter used by Series<R>. A ring supplies the additive
/// and multiplicative identities, embeddings of integers and rationals,
/// inversion of units and a zero test.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static constexpr const char* name = "rational";
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long n) { return Rational(n); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational inverse(const Rational& x) {
    if (is_zero(x)) throw std::domain_error("division by zero in rational ring");
    return Rational(1) / x;
  }
};

/// Double-precision complex ring. Values with modulus below `kZeroTol` count
/// as zero in precondition checks (c0 == 0 tests on computed series).
template <>
struct RingTraits<Complex> {
  static constexpr const char* name = "complex";
  static constexpr double kZeroTol = 1e-13;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_int(long n) { return {static_cast<double>(n), 0.0}; }
  static Complex from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static bool is_zero(const Complex& x) { return std::abs(x) <= kZeroTol; }
  static Complex inverse(const Complex& x) {
    if (x == zero()) throw std::domain_error("division by zero in complex ring");
    return 1.0 / x;
  }
};

/// n/d embedded in the ring.
template <class R>
R ring_frac(long n, long d) {
  using T = RingTraits<R>;
  R num = T::from_int(n);
  R inv = T::inverse(T::from_int(d));
  return num * inv;
}

}  // namespace gsg
