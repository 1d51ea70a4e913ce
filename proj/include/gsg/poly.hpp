#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "gsg/rational.hpp"
#include "gsg/ring.hpp"

namespace gsg {

/// Polynomial with rational coefficients in the Carathéodory coefficients
/// p1..p5. Used as a symbolic coefficient ring for Series so that closed-form
/// coefficient identities can be checked exactly rather than sampled.
class Poly {
 public:
  static constexpr int kVars = 5;
  using Exponents = std::array<std::uint8_t, kVars>;

  Poly() = default;
  Poly(long c);               // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);    // NOLINT(google-explicit-constructor)

  /// The variable p_index, index in 1..5.
  static Poly var(int index);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coeff(const Exponents& e) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// Weighted degree with weight(p_k) = k; every term of a homogeneous
  /// coefficient formula has the same weight. -1 for the zero polynomial.
  int max_weight() const;

  /// Variables render as p1..p5; terms in decreasing weighted order.
  std::string to_string() const;

  Complex evaluate(std::span<const Complex, kVars> p) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::map<Exponents, Rational> terms_;
};

/// Monomial exponent vector from a list like {4,0,0,0,0} (p1^4).
Poly::Exponents exps(int e1, int e2 = 0, int e3 = 0, int e4 = 0, int e5 = 0);

template <>
struct RingTraits<Poly> {
  static constexpr const char* name = "poly";
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(1L); }
  static Poly from_int(long n) { return Poly(n); }
  static Poly from_rational(const Rational& q) { return Poly(q); }
  static bool is_zero(const Poly& x) { return x.is_zero(); }
  /// Only nonzero constants are units.
  static Poly inverse(const Poly& x) {
    if (!x.is_constant() || x.is_zero())
      throw std::domain_error("polynomial is not a unit: " + x.to_string());
    return Poly(Rational(1) / x.constant_term());
  }
};

}  // namespace gsg
