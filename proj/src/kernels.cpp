#include "gsg/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gsg {

namespace {

bool cpu_has_avx2() {
#if defined(GSG_HAVE_AVX2_KERNELS) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

SimdLevel detect() {
  if (const char* env = std::getenv("GSG_SIMD"); env != nullptr && std::string(env) == "scalar")
    return SimdLevel::scalar;
  return cpu_has_avx2() ? SimdLevel::avx2 : SimdLevel::scalar;
}

void check_grid(const kernels::DiskGrid& g) {
  const std::size_t nt = g.cos1.size();
  if (g.radii.empty() || nt == 0 || g.sin1.size() != nt || g.cos2.size() != nt || g.sin2.size() != nt)
    throw std::invalid_argument("disk_grid_max: empty grid or mismatched angle tables");
}

void check_batch(const kernels::MomentBatch& b, std::span<double> re, std::span<double> im) {
  const std::size_t n = b.count * b.atoms;
  if (b.weight.size() < n || b.cos_theta.size() < n || b.sin_theta.size() < n)
    throw std::invalid_argument("herglotz_moments: input arrays shorter than count * atoms");
  if (re.size() < 5 * b.count || im.size() < 5 * b.count)
    throw std::invalid_argument("herglotz_moments: output arrays shorter than 5 * count");
}

}  // namespace

std::string_view simd_level_name(SimdLevel level) { return level == SimdLevel::avx2 ? "avx2" : "scalar"; }

bool simd_level_available(SimdLevel level) {
  if (level == SimdLevel::scalar) return true;
  static const bool avx2 = cpu_has_avx2();
  return avx2;
}

SimdLevel active_simd_level() {
  static const SimdLevel level = detect();
  return level;
}

namespace kernels {

#if !defined(GSG_HAVE_AVX2_KERNELS)
namespace avx2 {
GridMax disk_grid_max(const DiskGrid&) { throw std::logic_error("AVX2 kernels not compiled in"); }
void herglotz_moments(const MomentBatch&, std::span<double>, std::span<double>) {
  throw std::logic_error("AVX2 kernels not compiled in");
}
}  // namespace avx2
#endif

GridMax disk_grid_max(const DiskGrid& grid, SimdLevel level) {
  check_grid(grid);
  if (level == SimdLevel::avx2) {
    if (!simd_level_available(level)) throw std::invalid_argument("AVX2 kernel requested but unavailable");
    return avx2::disk_grid_max(grid);
  }
  return scalar::disk_grid_max(grid);
}

GridMax disk_grid_max(const DiskGrid& grid) { return disk_grid_max(grid, active_simd_level()); }

void herglotz_moments(const MomentBatch& batch, std::span<double> re, std::span<double> im, SimdLevel level) {
  check_batch(batch, re, im);
  if (level == SimdLevel::avx2) {
    if (!simd_level_available(level)) throw std::invalid_argument("AVX2 kernel requested but unavailable");
    avx2::herglotz_moments(batch, re, im);
    return;
  }
  scalar::herglotz_moments(batch, re, im);
}

void herglotz_moments(const MomentBatch& batch, std::span<double> re, std::span<double> im) {
  herglotz_moments(batch, re, im, active_simd_level());
}

}  // namespace kernels
}  // namespace gsg
