#include "gsg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gsg {

namespace {

int weight_of(const Poly::Exponents& e) {
  int w = 0;
  for (int k = 0; k < Poly::kVars; ++k) w += (k + 1) * e[k];
  return w;
}

}  // namespace

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exponents{}, c);
}

Poly Poly::var(int index) {
  if (index < 1 || index > kVars) throw std::out_of_range("Poly::var index must be in 1..5");
  Exponents e{};
  e[index - 1] = 1;
  Poly p;
  p.terms_.emplace(e, Rational(1));
  return p;
}

Rational Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Poly::constant_term() const { return coeff(Exponents{}); }

int Poly::max_weight() const {
  int w = -1;
  for (const auto& [e, c] : terms_) w = std::max(w, weight_of(e));
  return w;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exponents e{};
      for (int k = 0; k < Poly::kVars; ++k) {
        int s = ea[k] + eb[k];
        if (s > 255) throw std::overflow_error("Poly exponent overflow");
        e[k] = static_cast<std::uint8_t>(s);
      }
      Rational c = ca * cb;
      out.add_term(e, c);
    }
  }
  return out;
}

Poly operator-(const Poly& a) {
  Poly out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  // Higher weight first, then higher power of p1 first: p1^4, p1^2*p2, p2^2, ...
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    int wx = weight_of(x.first), wy = weight_of(y.first);
    if (wx != wy) return wx > wy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool is_unit_monomial = (mag == 1) && e != Exponents{};
    if (!is_unit_monomial) {
      os << (mag.get_den() == 1 ? mag.get_num().get_str() : gsg::to_string(mag));
    }
    bool need_star = !is_unit_monomial;
    for (int k = 0; k < kVars; ++k) {
      if (e[k] == 0) continue;
      if (need_star) os << "*";
      os << "p" << (k + 1);
      if (e[k] > 1) os << "^" << static_cast<int>(e[k]);
      need_star = true;
    }
  }
  return os.str();
}

Complex Poly::evaluate(std::span<const Complex, kVars> p) const {
  Complex sum{0.0, 0.0};
  for (const auto& [e, c] : terms_) {
    Complex term{c.get_d(), 0.0};
    for (int k = 0; k < kVars; ++k)
      for (int j = 0; j < e[k]; ++j) term *= p[k];
    sum += term;
  }
  return sum;
}

Poly::Exponents exps(int e1, int e2, int e3, int e4, int e5) {
  return {static_cast<std::uint8_t>(e1), static_cast<std::uint8_t>(e2),
          static_cast<std::uint8_t>(e3), static_cast<std::uint8_t>(e4),
          static_cast<std::uint8_t>(e5)};
}

}  // namespace gsg
