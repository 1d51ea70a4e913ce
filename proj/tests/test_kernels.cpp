#include <doctest.h>

#include <cstring>

#include "gsg/kernels.hpp"
#include "test_support.hpp"

using namespace gsg;

namespace {

struct Tables {
  std::vector<double> radii, c1, s1, c2, s2;
  kernels::DiskGrid grid(double a, double b, double c) const { return {a, b, c, radii, c1, s1, c2, s2}; }
};

Tables make_tables(std::size_t nr, std::size_t nt, double offset) {
  Tables t;
  for (std::size_t i = 0; i < nr; ++i) t.radii.push_back(nr == 1 ? 0.5 : static_cast<double>(i) / (nr - 1));
  for (std::size_t j = 0; j < nt; ++j) {
    const double th = offset + 2.0 * std::numbers::pi * j / nt;
    t.c1.push_back(std::cos(th));
    t.s1.push_back(std::sin(th));
    t.c2.push_back(std::cos(2 * th));
    t.s2.push_back(std::sin(2 * th));
  }
  return t;
}

bool same_bits(double x, double y) { return std::memcmp(&x, &y, sizeof x) == 0; }

}  // namespace

TEST_CASE("kernels: scalar grid max matches direct evaluation") {
  const Tables t = make_tables(17, 23, 0.1);
  const auto g = kernels::disk_grid_max(t.grid(0.3, -1.2, 0.8), SimdLevel::scalar);
  double best = -1.0;
  for (double r : t.radii)
    for (std::size_t j = 0; j < t.c1.size(); ++j) {
      const Complex z = r * Complex(t.c1[j], t.s1[j]);
      best = std::max(best, std::abs(0.3 - 1.2 * z + 0.8 * z * z) + 1.0 - r * r);
    }
  CHECK(std::abs(g.value - best) < 1e-14);
}

TEST_CASE("kernels: argument validation") {
  Tables t = make_tables(4, 8, 0.0);
  t.s2.pop_back();
  CHECK_THROWS_AS(kernels::disk_grid_max(t.grid(1, 1, 1)), std::invalid_argument);
  std::vector<double> short_out(3);
  std::vector<double> w{1.0}, c{1.0}, s{0.0};
  CHECK_THROWS_AS(kernels::herglotz_moments({1, 1, w, c, s}, short_out, short_out), std::invalid_argument);
}

TEST_CASE("kernels: first maximum wins ties") {
  const Tables t = make_tables(5, 13, 0.0);
  const auto g = kernels::disk_grid_max(t.grid(0.0, 0.0, 0.0));
  CHECK(g.radius_index == 0);
  CHECK(g.angle_index == 0);
  CHECK(g.value == 1.0);
}

TEST_CASE("kernels: moments match direct summation") {
  std::mt19937_64 rng(71);
  const std::size_t count = 37, atoms = 6;
  std::vector<double> w(count * atoms, 0.0), c(count * atoms, 1.0), s(count * atoms, 0.0);
  std::vector<HerglotzAtoms> configs;
  for (std::size_t m = 0; m < count; ++m) {
    const auto list = gsg::testing::random_atom_list(rng, static_cast<int>(atoms));
    for (std::size_t k = 0; k < list.size(); ++k) {
      w[k * count + m] = list[k].weight;
      c[k * count + m] = std::cos(list[k].theta);
      s[k * count + m] = std::sin(list[k].theta);
    }
    configs.emplace_back(list);
  }
  std::vector<double> re(5 * count), im(5 * count);
  kernels::herglotz_moments({count, atoms, w, c, s}, re, im);
  for (std::size_t m = 0; m < count; ++m) {
    const auto oracle = gsg::testing::moments_oracle(configs[m]);
    for (std::size_t n = 0; n < 5; ++n) CHECK(std::abs(Complex(re[n * count + m], im[n * count + m]) - oracle[n]) < 1e-13);
  }
}

TEST_CASE("kernels: AVX2 and scalar paths are bit-identical") {
  if (!simd_level_available(SimdLevel::avx2)) {
    MESSAGE("AVX2 unavailable; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(72);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (std::size_t nt : {1u, 3u, 4u, 5u, 64u, 67u, 256u}) {
    const Tables t = make_tables(9, nt, 0.37);
    for (int trial = 0; trial < 20; ++trial) {
      const auto grid = t.grid(u(rng), u(rng), u(rng));
      const auto a = kernels::disk_grid_max(grid, SimdLevel::scalar);
      const auto b = kernels::disk_grid_max(grid, SimdLevel::avx2);
      CHECK(same_bits(a.value, b.value));
      CHECK(a.radius_index == b.radius_index);
      CHECK(a.angle_index == b.angle_index);
    }
  }
  // Ties inside a vector block still resolve to the lowest angle index.
  const Tables flat = make_tables(3, 11, 0.0);
  const auto tie = kernels::disk_grid_max(flat.grid(0, 0, 0), SimdLevel::avx2);
  CHECK(tie.angle_index == 0);
  CHECK(tie.radius_index == 0);

  for (std::size_t count : {1u, 4u, 7u, 100u}) {
    const std::size_t atoms = 5;
    std::vector<double> w(count * atoms), c(count * atoms), s(count * atoms);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = unit(rng);
      const double th = 6.3 * unit(rng);
      c[i] = std::cos(th);
      s[i] = std::sin(th);
    }
    std::vector<double> re1(5 * count), im1(5 * count), re2(5 * count), im2(5 * count);
    kernels::herglotz_moments({count, atoms, w, c, s}, re1, im1, SimdLevel::scalar);
    kernels::herglotz_moments({count, atoms, w, c, s}, re2, im2, SimdLevel::avx2);
    for (std::size_t i = 0; i < re1.size(); ++i) {
      CHECK(same_bits(re1[i], re2[i]));
      CHECK(same_bits(im1[i], im2[i]));
    }
  }
}

TEST_CASE("kernels: level names") {
  CHECK(simd_level_name(SimdLevel::scalar) == "scalar");
  CHECK(simd_level_name(SimdLevel::avx2) == "avx2");
  CHECK(simd_level_available(SimdLevel::scalar));
  CHECK(simd_level_available(active_simd_level()));
}
