#pragma once

// Seeded generators and reference computations that share no code path with
// the library routines they check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "gsg/caratheodory.hpp"
#include "gsg/rational.hpp"
#include "gsg/series.hpp"

namespace gsg::testing {

inline std::vector<Atom> random_atom_list(std::mt19937_64& rng, int max_atoms = 6) {
  std::uniform_int_distribution<int> count(1, max_atoms);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Atom> atoms(static_cast<std::size_t>(count(rng)));
  double total = 0.0;
  for (Atom& a : atoms) {
    a.weight = -std::log1p(-unit(rng));
    a.theta = 2.0 * std::numbers::pi * unit(rng);
    total += a.weight;
  }
  for (Atom& a : atoms) a.weight /= total;
  return atoms;
}

inline HerglotzAtoms random_atoms(std::mt19937_64& rng, int max_atoms = 6) {
  return HerglotzAtoms(random_atom_list(rng, max_atoms));
}

/// p_1..p_5 by direct summation.
inline std::array<Complex, 5> moments_oracle(const HerglotzAtoms& atoms) {
  std::array<Complex, 5> p{};
  for (const Atom& a : atoms.atoms())
    for (int n = 1; n <= 5; ++n) p[n - 1] += 2.0 * a.weight * std::exp(Complex(0.0, n * a.theta));
  return p;
}

inline Rational random_rational(std::mt19937_64& rng, long span = 9, long max_den = 7) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return rat(num(rng), den(rng));
}

inline Series<Rational> random_rational_series(std::mt19937_64& rng, int order, bool zero_constant = false) {
  std::vector<Rational> c;
  for (int n = 0; n <= order; ++n) c.push_back(random_rational(rng));
  if (zero_constant) c[0] = 0;
  return Series<Rational>(std::move(c));
}

/// Cauchy product without skipping or early exits.
template <class R>
std::vector<R> naive_product(std::span<const R> a, std::span<const R> b, std::size_t n) {
  std::vector<R> out(n + 1, R(0));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j) {
      R t = a[i] * b[j];
      out[i + j] += t;
    }
  return out;
}

/// Gregory numbers from G_0 = 1 and sum_{k=0..n} (-1)^{n-k} G_k / (n - k + 1) = 0.
inline std::vector<Rational> gregory_recurrence(int n_max) {
  std::vector<Rational> g{Rational(1)};
  for (int n = 1; n <= n_max; ++n) {
    Rational s = 0;
    for (int k = 0; k < n; ++k) {
      Rational term = g[k] / Rational(n - k + 1);
      if ((n - k) % 2 == 1) term = -term;
      s += term;
    }
    g.push_back(-s);
  }
  return g;
}

/// Maximum of |a + bz + cz^2| + 1 - |z|^2 over a dense Cartesian grid of the
/// closed disc plus the boundary circle.
inline double y_dense_grid(double a, double b, double c, int n = 600) {
  auto f = [&](Complex z) { return std::abs(a + b * z + c * z * z) + 1.0 - std::norm(z); };
  double best = f(0.0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const Complex z(-1.0 + 2.0 * i / n, -1.0 + 2.0 * j / n);
      if (std::norm(z) <= 1.0) best = std::max(best, f(z));
    }
  for (int k = 0; k < 8 * n; ++k) best = std::max(best, f(std::polar(1.0, 2.0 * std::numbers::pi * k / (8 * n))));
  return best;
}

}  // namespace gsg::testing
