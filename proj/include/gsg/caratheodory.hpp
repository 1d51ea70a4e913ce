#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "gsg/rational.hpp"
#include "gsg/series.hpp"

namespace gsg {

struct Atom {
  double weight;  ///< t_k >= 0
  double theta;   ///< radians
};

/// A finite probability measure on the unit circle. The Carathéodory
/// function it induces is p(z) = sum_k t_k (1 + e^{i theta_k} z) / (1 - e^{i theta_k} z).
class HerglotzAtoms {
 public:
  static constexpr double kSumTol = 1e-12;
  static constexpr double kRenormalizeTol = 1e-6;

  /// Validates the atoms. Weight sums within kRenormalizeTol of 1 are
  /// rescaled to 1; anything further off, any negative weight, non-finite
  /// value or empty list throws std::invalid_argument.
  explicit HerglotzAtoms(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  /// theta_k -> theta_k - phi, which multiplies p_n by e^{-i n phi}.
  HerglotzAtoms rotated(double phi) const;
  /// Rotation making p1 real and nonnegative.
  HerglotzAtoms normalized() const;

 private:
  std::vector<Atom> atoms_;
};

/// p_n = 2 sum_k t_k e^{i n theta_k} for 1 <= n <= n_max, p_0 = 1.
Series<Complex> herglotz_series(const HerglotzAtoms& atoms, int n_max);

/// The Schwarz function w = (p - 1) / (p + 1); p[0] must be 1.
template <class R>
Series<R> p_to_w(const Series<R>& p) {
  using T = RingTraits<R>;
  if (!T::is_zero(p[0] - T::one())) throw SeriesError("p_to_w: p(0) must be 1");
  const Series<R> one = Series<R>::one(p.order());
  Series<R> w = ps_div(p - one, p + one);
  std::vector<R> c(w.coeffs().begin(), w.coeffs().end());
  c[0] = T::zero();
  return Series<R>(std::move(c));
}

/// p = (1 + w) / (1 - w), the inverse of p_to_w.
template <class R>
Series<R> w_to_p(const Series<R>& w) {
  if (!RingTraits<R>::is_zero(w[0])) throw SeriesError("w_to_p: w(0) must be 0");
  const Series<R> one = Series<R>::one(w.order());
  return ps_div(one + w, one - w);
}

/// Representation parameters for (p2, p3) given p1 >= 0.
struct Lemma1Params {
  double p1;  ///< in [0, 2]
  Complex x;  ///< |x| <= 1
  Complex y;  ///< |y| <= 1
};

/// 2 p2 = p1^2 + x (4 - p1^2),
/// 4 p3 = p1^3 + 2 (4 - p1^2) p1 x - p1 (4 - p1^2) x^2 + 2 (4 - p1^2)(1 - |x|^2) y.
/// Throws std::invalid_argument when a parameter leaves its range by more
/// than 1e-12.
std::pair<Complex, Complex> lemma1_reconstruct(const Lemma1Params& params);

void to_json(nlohmann::json& j, const HerglotzAtoms& atoms);
/// Accepts an array of {"t": .., "theta": ..} objects.
HerglotzAtoms atoms_from_json(const nlohmann::json& j);

}  // namespace gsg
