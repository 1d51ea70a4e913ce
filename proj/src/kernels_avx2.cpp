#include <immintrin.h>

#include <cmath>
#include <cstdint>

#include "gsg/kernels.hpp"

namespace gsg::kernels::avx2 {

namespace {
constexpr std::size_t kLanes = 4;
}

GridMax disk_grid_max(const DiskGrid& g) {
  const std::size_t nt = g.cos1.size();
  const std::size_t vec_end = nt - nt % kLanes;
  const __m256d va = _mm256_set1_pd(g.a);
  const __m256d lane_offsets = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);

  GridMax best{-1.0, 0, 0};
  bool have = false;
  for (std::size_t i = 0; i < g.radii.size(); ++i) {
    const double r = g.radii[i];
    const double br = g.b * r;
    const double cr2 = g.c * (r * r);
    const double base = 1.0 - r * r;
    const __m256d vbr = _mm256_set1_pd(br);
    const __m256d vcr2 = _mm256_set1_pd(cr2);
    const __m256d vbase = _mm256_set1_pd(base);

    // Per-lane running maximum and the angle index where it was first seen.
    __m256d lane_max = _mm256_set1_pd(-INFINITY);
    __m256d lane_idx = _mm256_setzero_pd();
    for (std::size_t j = 0; j < vec_end; j += kLanes) {
      const __m256d c1 = _mm256_loadu_pd(g.cos1.data() + j);
      const __m256d s1 = _mm256_loadu_pd(g.sin1.data() + j);
      const __m256d c2 = _mm256_loadu_pd(g.cos2.data() + j);
      const __m256d s2 = _mm256_loadu_pd(g.sin2.data() + j);
      const __m256d re = _mm256_add_pd(_mm256_add_pd(va, _mm256_mul_pd(vbr, c1)), _mm256_mul_pd(vcr2, c2));
      const __m256d im = _mm256_add_pd(_mm256_mul_pd(vbr, s1), _mm256_mul_pd(vcr2, s2));
      const __m256d mod2 = _mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im));
      const __m256d v = _mm256_add_pd(_mm256_sqrt_pd(mod2), vbase);
      const __m256d gt = _mm256_cmp_pd(v, lane_max, _CMP_GT_OQ);
      const __m256d idx = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(j)), lane_offsets);
      lane_max = _mm256_blendv_pd(lane_max, v, gt);
      lane_idx = _mm256_blendv_pd(lane_idx, idx, gt);
    }

    double row_max = -INFINITY;
    std::size_t row_j = 0;
    bool row_have = false;
    if (vec_end > 0) {
      alignas(32) double m[kLanes];
      alignas(32) double ix[kLanes];
      _mm256_store_pd(m, lane_max);
      _mm256_store_pd(ix, lane_idx);
      for (std::size_t l = 0; l < kLanes; ++l) {
        const auto j = static_cast<std::size_t>(ix[l]);
        if (!row_have || m[l] > row_max || (m[l] == row_max && j < row_j)) {
          row_max = m[l];
          row_j = j;
          row_have = true;
        }
      }
    }
    for (std::size_t j = vec_end; j < nt; ++j) {
      const double re = (g.a + br * g.cos1[j]) + cr2 * g.cos2[j];
      const double im = br * g.sin1[j] + cr2 * g.sin2[j];
      const double v = std::sqrt(re * re + im * im) + base;
      if (!row_have || v > row_max) {
        row_max = v;
        row_j = j;
        row_have = true;
      }
    }
    if (!have || row_max > best.value) {
      best = {row_max, i, row_j};
      have = true;
    }
  }
  return best;
}

void herglotz_moments(const MomentBatch& b, std::span<double> re, std::span<double> im) {
  const std::size_t count = b.count;
  const std::size_t vec_end = count - count % kLanes;
  const __m256d two = _mm256_set1_pd(2.0);
  for (std::size_t m = 0; m < vec_end; m += kLanes) {
    __m256d pr[5];
    __m256d pi[5];
    for (int n = 0; n < 5; ++n) {
      pr[n] = _mm256_setzero_pd();
      pi[n] = _mm256_setzero_pd();
    }
    for (std::size_t k = 0; k < b.atoms; ++k) {
      const std::size_t idx = k * count + m;
      const __m256d t2 = _mm256_mul_pd(two, _mm256_loadu_pd(b.weight.data() + idx));
      const __m256d c = _mm256_loadu_pd(b.cos_theta.data() + idx);
      const __m256d s = _mm256_loadu_pd(b.sin_theta.data() + idx);
      __m256d ur = c;
      __m256d ui = s;
      for (int n = 0; n < 5; ++n) {
        pr[n] = _mm256_add_pd(pr[n], _mm256_mul_pd(t2, ur));
        pi[n] = _mm256_add_pd(pi[n], _mm256_mul_pd(t2, ui));
        const __m256d nr = _mm256_sub_pd(_mm256_mul_pd(ur, c), _mm256_mul_pd(ui, s));
        const __m256d ni = _mm256_add_pd(_mm256_mul_pd(ur, s), _mm256_mul_pd(ui, c));
        ur = nr;
        ui = ni;
      }
    }
    for (int n = 0; n < 5; ++n) {
      _mm256_storeu_pd(re.data() + n * count + m, pr[n]);
      _mm256_storeu_pd(im.data() + n * count + m, pi[n]);
    }
  }
  for (std::size_t m = vec_end; m < count; ++m) {
    double pr[5] = {0, 0, 0, 0, 0};
    double pi[5] = {0, 0, 0, 0, 0};
    for (std::size_t k = 0; k < b.atoms; ++k) {
      const std::size_t idx = k * count + m;
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
      re[n * count + m] = pr[n];
      im[n * count + m] = pi[n];
    }
  }
}

}  // namespace gsg::kernels::avx2
