#pragma once

// Coefficient functionals of normalized f = z + a2 z^2 + ..., the exact bound
// table for the class, and the classical inequalities used as property checks.

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gsg/caratheodory.hpp"
#include "gsg/rational.hpp"
#include "gsg/series.hpp"
#include "gsg/sg_class.hpp"

namespace gsg {

enum class FunctionalId {
  a2,
  a3,
  a4,
  a5,
  a6,
  beta1,
  beta2,
  beta3,
  beta4,
  inv2,
  inv3,
  inv4,
  a2a3_minus_a4,
  h22,
  h31,
  fekete_szego,
};

std::string_view functional_name(FunctionalId id);
/// Accepts the names produced by functional_name ("a4", "beta2", "A3",
/// "a2a3_minus_a4", "h22", "h31", "fs"). Throws std::invalid_argument.
FunctionalId parse_functional(std::string_view name);
std::span<const FunctionalId> all_functionals();

/// a2..a6, log coefficients beta1..beta4 and inverse coefficients A2..A4.
template <class R>
struct CoeffSetT {
  std::array<R, 5> a;
  std::array<R, 4> beta;
  std::array<R, 3> inv;
};
using CoeffSet = CoeffSetT<Complex>;

/// beta_n from a_n; log(f(z)/z) = 2 sum beta_n z^n.
template <class R>
std::array<R, 4> beta_from_a(const std::array<R, 5>& a) {
  auto q = [](long n, long d) { return ring_frac<R>(n, d); };
  const R& a2 = a[0];
  const R& a3 = a[1];
  const R& a4 = a[2];
  const R& a5 = a[3];
  const R a2_2 = a2 * a2;
  R b1 = q(1, 2) * a2;
  R b2 = q(1, 2) * (a3 - q(1, 2) * a2_2);
  R b3 = q(1, 2) * (a4 - a2 * a3 + q(1, 3) * a2_2 * a2);
  R b4 = q(1, 2) * (a5 - a2 * a4 + a2_2 * a3 - q(1, 2) * a3 * a3 - q(1, 4) * a2_2 * a2_2);
  return {b1, b2, b3, b4};
}

/// A2..A4 of the inverse function from a_n.
template <class R>
std::array<R, 3> inverse_from_a(const std::array<R, 5>& a) {
  auto q = [](long n, long d) { return ring_frac<R>(n, d); };
  const R& a2 = a[0];
  const R& a3 = a[1];
  const R& a4 = a[2];
  const R a2_2 = a2 * a2;
  R A2 = -a2;
  R A3 = q(2, 1) * a2_2 - a3;
  R A4 = q(-5, 1) * a2_2 * a2 + q(5, 1) * a2 * a3 - a4;
  return {A2, A3, A4};
}

/// beta_1..beta_4 as polynomials in p_1..p_4. The p_4 coefficient of beta_4
/// is 2880/92160 = 1/32; derive_formulas() re-derives it from the series.
template <class R>
std::array<R, 4> beta_from_p(const std::array<R, 5>& p) {
  auto q = [](long n, long d) { return ring_frac<R>(n, d); };
  const R& p1 = p[0];
  const R& p2 = p[1];
  const R& p3 = p[2];
  const R& p4 = p[3];
  const R p1_2 = p1 * p1;
  R b1 = q(1, 8) * p1;
  R b2 = q(1, 192) * (q(-7, 1) * p1_2 + q(12, 1) * p2);
  R b3 = q(1, 1152) * (q(17, 1) * p1_2 * p1 - q(56, 1) * p1 * p2 + q(48, 1) * p3);
  R b4 = q(-1, 92160) * (q(649, 1) * p1_2 * p1_2 + q(1680, 1) * p2 * p2 + q(3360, 1) * p1 * p3 -
                         q(3060, 1) * p1_2 * p2 - q(2880, 1) * p4);
  return {b1, b2, b3, b4};
}

/// A2..A4 as polynomials in p_1..p_3.
template <class R>
std::array<R, 3> inverse_from_p(const std::array<R, 5>& p) {
  auto q = [](long n, long d) { return ring_frac<R>(n, d); };
  const R& p1 = p[0];
  const R& p2 = p[1];
  const R& p3 = p[2];
  const R p1_2 = p1 * p1;
  R A2 = q(-1, 4) * p1;
  R A3 = q(1, 6) * p1_2 - q(1, 8) * p2;
  R A4 = q(-1, 576) * (q(48, 1) * p3 - q(128, 1) * p1 * p2 + q(83, 1) * p1_2 * p1);
  return {A2, A3, A4};
}

template <class R>
CoeffSetT<R> coeffs_from_a(const std::array<R, 5>& a) {
  return {a, beta_from_a(a), inverse_from_a(a)};
}

/// Closed-form route: a from p, then beta and A from a.
template <class R>
CoeffSetT<R> coeffs_from_p(const std::array<R, 5>& p) {
  return coeffs_from_a(a_from_p(p));
}

/// beta_1..beta_m from log(f(z)/z) / 2; requires order(f) >= m + 1.
template <class R>
std::vector<R> log_coeffs(const Series<R>& f, int m) {
  if (m < 1 || f.order() < m + 1) throw std::invalid_argument("log_coeffs: need order(f) >= m + 1, m >= 1");
  const Series<R> g = ps_log(divide_by_z(f.truncated(m + 1)));
  const R half = ring_frac<R>(1, 2);
  std::vector<R> out;
  out.reserve(m);
  for (int n = 1; n <= m; ++n) out.push_back(g[n] * half);
  return out;
}

/// A_2..A_{m+1} from the compositional inverse; requires order(f) >= m + 1.
template <class R>
std::vector<R> inverse_coeffs(const Series<R>& f, int m) {
  if (m < 1 || f.order() < m + 1) throw std::invalid_argument("inverse_coeffs: need order(f) >= m + 1, m >= 1");
  const Series<R> g = ps_revert(f.truncated(m + 1));
  return std::vector<R>(g.coeffs().begin() + 2, g.coeffs().end());
}

/// Series route: a_n read off f, beta_n from the logarithm, A_n from
/// reversion. Requires order(f) >= 6.
template <class R>
CoeffSetT<R> coeffs_from_series(const Series<R>& f) {
  if (f.order() < 6) throw std::invalid_argument("coeffs_from_series: need order(f) >= 6");
  CoeffSetT<R> c;
  for (int n = 2; n <= 6; ++n) c.a[n - 2] = f[n];
  const std::vector<R> beta = log_coeffs(f, 4);
  const std::vector<R> inv = inverse_coeffs(f, 3);
  for (int n = 0; n < 4; ++n) c.beta[n] = beta[n];
  for (int n = 0; n < 3; ++n) c.inv[n] = inv[n];
  return c;
}

namespace detail {

template <class R>
R det_laplace(const std::vector<std::vector<R>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  R acc = RingTraits<R>::zero();
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<R>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<R> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    R term = m[0][col] * det_laplace(minor);
    if (col % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace detail

/// H_q(n) = det [a_{n+i+j}]_{i,j<q} with a_1 = 1.
/// `a` holds a_1, a_2, ..., so a[k-1] is a_k.
template <class R>
R hankel_det(std::span<const R> a, int q, int n) {
  if (q < 1 || q > 6 || n < 1) throw std::invalid_argument("hankel_det: need 1 <= q <= 6 and n >= 1");
  const int last = n + 2 * q - 2;
  if (static_cast<int>(a.size()) < last)
    throw std::invalid_argument("hankel_det: need coefficients through a_" + std::to_string(last));
  std::vector<std::vector<R>> m(q, std::vector<R>(q, RingTraits<R>::zero()));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) m[i][j] = a[n + i + j - 1];
  return detail::det_laplace(m);
}

/// a1 = 1 followed by the CoeffSet's a2..a6.
template <class R>
std::array<R, 6> a_with_leading_one(const CoeffSetT<R>& c) {
  return {RingTraits<R>::one(), c.a[0], c.a[1], c.a[2], c.a[3], c.a[4]};
}

template <class R>
R fekete_szego(const R& a2, const R& a3, const R& mu) {
  return a3 - mu * a2 * a2;
}

/// a3 (a2 a4 - a3^2) - a4 (a4 - a2 a3) + a5 (a3 - a2^2).
template <class R>
R h31_expansion(const std::array<R, 5>& a) {
  const R& a2 = a[0];
  const R& a3 = a[1];
  const R& a4 = a[2];
  const R& a5 = a[3];
  return a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2);
}

struct TranscriptionError : std::logic_error {
  using std::logic_error::logic_error;
};

inline constexpr double kH31CrossCheckTol = 1e-12;

namespace detail {

inline bool agree(const Rational& x, const Rational& y) { return x == y; }
inline bool agree(const Complex& x, const Complex& y) { return std::abs(x - y) <= kH31CrossCheckTol; }

}  // namespace detail

/// The named functional of c. H3(1) is evaluated by its expansion and by the
/// 3x3 determinant; disagreement throws TranscriptionError.
template <class R>
R functional_eval(FunctionalId id, const CoeffSetT<R>& c, const R& mu = RingTraits<R>::zero()) {
  const auto& a = c.a;
  switch (id) {
    case FunctionalId::a2: return a[0];
    case FunctionalId::a3: return a[1];
    case FunctionalId::a4: return a[2];
    case FunctionalId::a5: return a[3];
    case FunctionalId::a6: return a[4];
    case FunctionalId::beta1: return c.beta[0];
    case FunctionalId::beta2: return c.beta[1];
    case FunctionalId::beta3: return c.beta[2];
    case FunctionalId::beta4: return c.beta[3];
    case FunctionalId::inv2: return c.inv[0];
    case FunctionalId::inv3: return c.inv[1];
    case FunctionalId::inv4: return c.inv[2];
    case FunctionalId::a2a3_minus_a4: {
      R v = a[0] * a[1] - a[2];
      return v;
    }
    case FunctionalId::h22: {
      R v = a[0] * a[2] - a[1] * a[1];
      return v;
    }
    case FunctionalId::h31: {
      const R expansion = h31_expansion(a);
      const std::array<R, 6> full = a_with_leading_one(c);
      const R det = hankel_det<R>(std::span<const R>(full), 3, 1);
      if (!detail::agree(expansion, det)) throw TranscriptionError("H3(1) expansion disagrees with determinant");
      return expansion;
    }
    case FunctionalId::fekete_szego: return fekete_szego(a[0], a[1], mu);
  }
  throw std::invalid_argument("functional_eval: unknown functional");
}

/// |functional| on the complex closed-form route; the hot path of the search.
double functional_magnitude(FunctionalId id, const CoeffSet& c, Complex mu = {0.0, 0.0});

/// p1..p5 of the Carathéodory function induced by `atoms`.
std::array<Complex, 5> p_moments(const HerglotzAtoms& atoms);

/// Closed-form CoeffSet of the class member generated by `atoms`.
CoeffSet coeffs_from_atoms(const HerglotzAtoms& atoms);

/// Series-route CoeffSet (herglotz_series -> w -> f) at order `order` >= 6.
CoeffSet coeffs_from_atoms_series(const HerglotzAtoms& atoms, int order = kDefaultOrder);

enum class BoundStatus { proven, conjectured };

struct BoundRecord {
  FunctionalId id;
  Rational bound;
  bool sharp;
  std::optional<int> witness;  ///< index i of the extremal f_i
  std::string ref;
  BoundStatus status;
  std::string note;
};

std::string_view status_name(BoundStatus s);

/// Every fixed-constant bound: a2..a6 (plus the conjectured a6 value),
/// |a2 a3 - a4|, |H2(2)|, |H3(1)|, beta1..beta4 and A2..A4.
const std::vector<BoundRecord>& bounds_table();

/// Throws std::out_of_range when no record matches.
const BoundRecord& lookup_bound(FunctionalId id, BoundStatus status = BoundStatus::proven);

/// (1/4) max{1, |mu - 1/3|}; exact for rational mu.
Rational fekete_szego_bound(const Rational& mu);
double fekete_szego_bound(Complex mu);

nlohmann::json bounds_json();
/// Columns functional_id,bound_num,bound_den,sharp,witness,ref,status.
std::string bounds_csv();

struct DeBrangesResult {
  double lhs;
  double rhs;
  bool holds;
};

/// sum_{k=1..n} k (n-k+1) |beta_k|^2 <= sum_{k=1..n} (n-k+1)/k, holds with
/// slack 1e-12. `beta` holds beta_1..beta_m with m >= n.
DeBrangesResult debranges_check(std::span<const Complex> beta, int n);

/// (2n)! / (n! (n+1)!), the sharp bound on |A_n| over univalent functions.
long long lowner_bound(int n);

}  // namespace gsg
