#include <cmath>

#include "gsg/kernels.hpp"

namespace gsg::kernels::scalar {

GridMax disk_grid_max(const DiskGrid& g) {
  const std::size_t nt = g.cos1.size();
  GridMax best{-1.0, 0, 0};
  bool have = false;
  for (std::size_t i = 0; i < g.radii.size(); ++i) {
    const double r = g.radii[i];
    const double br = g.b * r;
    const double cr2 = g.c * (r * r);
    const double base = 1.0 - r * r;
    for (std::size_t j = 0; j < nt; ++j) {
      const double re = (g.a + br * g.cos1[j]) + cr2 * g.cos2[j];
      const double im = br * g.sin1[j] + cr2 * g.sin2[j];
      const double v = std::sqrt(re * re + im * im) + base;
      if (!have || v > best.value) {
        best = {v, i, j};
        have = true;
      }
    }
  }
  return best;
}

void herglotz_moments(const MomentBatch& b, std::span<double> re, std::span<double> im) {
  const std::size_t m_count = b.count;
  for (std::size_t m = 0; m < m_count; ++m) {
    double pr[5] = {0, 0, 0, 0, 0};
    double pi[5] = {0, 0, 0, 0, 0};
    for (std::size_t k = 0; k < b.atoms; ++k) {
      const std::size_t idx = k * m_count + m;
      const double t2 = 2.0 * b.weight[idx];
      const double c = b.cos_theta[idx];
      const double s = b.sin_theta[idx];
      double ur = c;
      double ui = s;
      for (int n = 0; n < 5; ++n) {
        pr[n] = pr[n] + t2 * ur;
        pi[n] = pi[n] + t2 * ui;
        const double nr = ur * c - ui * s;
        const double ni = ur * s + ui * c;
        ur = nr;
        ui = ni;
      }
    }
    for (int n = 0; n < 5; ++n) {
      re[n * m_count + m] = pr[n];
      im[n * m_count + m] = pi[n];
    }
  }
}

}  // namespace gsg::kernels::scalar
