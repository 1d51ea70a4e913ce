#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant.
//
// Both variants perform the same floating-point operations in the same order
// (kernel translation units are built with -ffp-contract=off), so results are
// bit-identical and selection at runtime does not change any output.

#include <cstddef>
#include <span>
#include <string_view>

namespace gsg {

enum class SimdLevel { scalar, avx2 };

std::string_view simd_level_name(SimdLevel level);

/// Compiled in and supported by the running CPU.
bool simd_level_available(SimdLevel level);

/// Best available level, decided once. GSG_SIMD=scalar forces the reference
/// path.
SimdLevel active_simd_level();

namespace kernels {

/// Tensor grid for |a + b z + c z^2| + 1 - |z|^2 with z = r e^{i theta}.
/// Angle tables hold cos(theta_j), sin(theta_j), cos(2 theta_j), sin(2 theta_j).
struct DiskGrid {
  double a;
  double b;
  double c;
  std::span<const double> radii;
  std::span<const double> cos1;
  std::span<const double> sin1;
  std::span<const double> cos2;
  std::span<const double> sin2;
};

struct GridMax {
  double value;
  std::size_t radius_index;
  std::size_t angle_index;
};

/// First maximum in radius-major order. Requires nonempty, equal-length
/// angle tables and at least one radius.
GridMax disk_grid_max(const DiskGrid& grid, SimdLevel level);
GridMax disk_grid_max(const DiskGrid& grid);

/// A batch of `count` atom configurations with `atoms` atoms each, stored
/// atom-major: element k * count + m belongs to configuration m.
struct MomentBatch {
  std::size_t count;
  std::size_t atoms;
  std::span<const double> weight;
  std::span<const double> cos_theta;
  std::span<const double> sin_theta;
};

/// p_n = 2 sum_k t_k e^{i n theta_k}, n = 1..5, written to re/im as
/// element (n - 1) * count + m. Both spans need 5 * count entries.
void herglotz_moments(const MomentBatch& batch, std::span<double> re, std::span<double> im, SimdLevel level);
void herglotz_moments(const MomentBatch& batch, std::span<double> re, std::span<double> im);

namespace scalar {
GridMax disk_grid_max(const DiskGrid& grid);
void herglotz_moments(const MomentBatch& batch, std::span<double> re, std::span<double> im);
}  // namespace scalar

namespace avx2 {
GridMax disk_grid_max(const DiskGrid& grid);
void herglotz_moments(const MomentBatch& batch, std::span<double> re, std::span<double> im);
}  // namespace avx2

}  // namespace kernels
}  // namespace gsg
