#pragma once

// Executable forms of the Carathéodory-class inequalities used to bound the
// coefficient functionals, the closed-form maximum Y(a, b, c) with its grid
// oracle, and the one-dimensional curves maximized in the bound proofs.

#include <string_view>

#include "gsg/rational.hpp"

namespace gsg {

struct Lemma2Value {
  double value;
  bool applicable;
};

/// |p3 - 2Q p1 p2 + R p1^3|, which is <= 2 whenever Q in [0, 1] and
/// Q(2Q - 1) <= R <= Q.
Lemma2Value lemma2_25(Complex p1, Complex p2, Complex p3, double q, double r);

struct Lemma2Bound {
  double value;
  double bound;  ///< 2 max{1, |2 mu - 1|}
};

/// |p_{n+k} - mu p_n p_k| against 2 max{1, |2 mu - 1|}.
Lemma2Bound lemma2_26(Complex pn, Complex pk, Complex pnk, double mu);

struct Lemma3Params {
  double tau;
  double psi;
  double rho;
  double sigma_c;
};

struct Lemma3Condition {
  double lhs;
  double rhs;
  bool holds;
};

/// 8s(1-s)[(tau psi - 2 rho)^2 + (tau(s + tau) - psi)^2] + tau(1-tau)(psi - 2 s tau)^2
///   <= 4 s tau^2 (1-tau)^2 (1-s),   s = sigma_c.
/// Throws std::invalid_argument unless 0 < tau < 1 and 0 < sigma_c < 1.
Lemma3Condition lemma3_condition(const Lemma3Params& p);

/// |rho p1^4 + s p2^2 + 2 tau p1 p3 - (3/2) psi p1^2 p2 - p4|.
double lemma3_value(Complex p1, Complex p2, Complex p3, Complex p4, const Lemma3Params& p);

struct YParams {
  double a;
  double b;
  double c;
};

/// Which closed-form branch y_value used.
enum class YBranch {
  sum_abs,            ///< ac >= 0, |b| >= 2(1 - |c|): |a| + |b| + |c|
  interior,           ///< ac >= 0, |b| < 2(1 - |c|): 1 + |a| + b^2 / (4(1 - |c|))
  neg_interior,       ///< ac < 0: 1 - |a| + b^2 / (4(1 - |c|))
  neg_plus,           ///< ac < 0: 1 + |a| + b^2 / (4(1 + |c|))
  r_first,            ///< R: |a| + |b| - |c|
  r_second,           ///< R: -|a| + |b| + |c|
  r_third,            ///< R: (|a| + |c|) sqrt(1 - b^2 / (4ac))
};

struct YValue {
  double value;
  YBranch branch;
};

/// max over the closed unit disc of |a + b z + c z^2| + 1 - |z|^2, by the
/// piecewise closed form. Boundary ties take the first listed branch and
/// ac == 0 counts as ac >= 0.
YValue y_value_detailed(const YParams& p);
double y_value(const YParams& p);
std::string_view y_branch_name(YBranch b);

struct YOracleResult {
  double value;
  Complex argmax;
};

/// Brute-force maximum: polar grid of resolution radii x resolution angles,
/// then three refinement passes each shrinking the window 8x around the
/// incumbent. Throws std::invalid_argument when resolution < 64.
YOracleResult y_oracle_detailed(const YParams& p, int resolution);
double y_oracle(const YParams& p, int resolution = 256);

enum class CurveId {
  H0,        ///< (-t^2 - 5t + 36) / 576
  C1_curve,  ///< (7 s^3 + 128 s^2 + 288) / 1728
  C4_curve,  ///< (208 s - 83 s^3) / 576
  H1,        ///< sqrt(400 - 7 s^2) (19 s^2 + 48) / (576 sqrt(93))
};

std::string_view curve_name(CurveId id);
/// Throws std::invalid_argument on an unknown name.
CurveId parse_curve(std::string_view name);
double curve_value(CurveId id, double x);

enum class Closure { open, closed };

struct IntervalMax {
  double argmax;
  double value;
  /// false when the supremum sits at an endpoint excluded from an open interval.
  bool attained;
};

/// Supremum of a proof curve on (lo, hi) or [lo, hi]: a 512-point scan,
/// golden-section refinement around the best interior sample, and the
/// endpoint limits.
IntervalMax max_on_interval(CurveId id, double lo, double hi, Closure closure = Closure::open);

/// Right end of the C4 interval, 4 sqrt(15/401).
double c4_interval_end();

}  // namespace gsg
