#include "gsg/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsg/kernels.hpp"

namespace gsg {

Lemma2Value lemma2_25(Complex p1, Complex p2, Complex p3, double q, double r) {
  const double value = std::abs(p3 - 2.0 * q * p1 * p2 + r * p1 * p1 * p1);
  const bool applicable = q >= 0.0 && q <= 1.0 && q * (2.0 * q - 1.0) <= r && r <= q;
  return {value, applicable};
}

Lemma2Bound lemma2_26(Complex pn, Complex pk, Complex pnk, double mu) {
  return {std::abs(pnk - mu * pn * pk), 2.0 * std::max(1.0, std::abs(2.0 * mu - 1.0))};
}

Lemma3Condition lemma3_condition(const Lemma3Params& p) {
  const double t = p.tau;
  const double s = p.sigma_c;
  if (!(t > 0.0 && t < 1.0) || !(s > 0.0 && s < 1.0))
    throw std::invalid_argument("lemma3_condition: tau and sigma must lie in (0, 1)");
  const double u = t * p.psi - 2.0 * p.rho;
  const double v = t * (s + t) - p.psi;
  const double w = p.psi - 2.0 * s * t;
  const double lhs = 8.0 * s * (1.0 - s) * (u * u + v * v) + t * (1.0 - t) * w * w;
  const double rhs = 4.0 * s * t * t * (1.0 - t) * (1.0 - t) * (1.0 - s);
  return {lhs, rhs, lhs <= rhs};
}

double lemma3_value(Complex p1, Complex p2, Complex p3, Complex p4, const Lemma3Params& p) {
  const Complex v = p.rho * p1 * p1 * p1 * p1 + p.sigma_c * p2 * p2 + 2.0 * p.tau * p1 * p3 -
                    1.5 * p.psi * p1 * p1 * p2 - p4;
  return std::abs(v);
}

YValue y_value_detailed(const YParams& p) {
  const double a = std::abs(p.a);
  const double b = std::abs(p.b);
  const double c = std::abs(p.c);
  const double b2 = p.b * p.b;
  const double ac = p.a * p.c;
  if (ac >= 0.0) {
    if (b >= 2.0 * (1.0 - c)) return {a + b + c, YBranch::sum_abs};
    return {1.0 + a + b2 / (4.0 * (1.0 - c)), YBranch::interior};
  }
  const double k = -4.0 * ac * (1.0 / (p.c * p.c) - 1.0);
  if (k <= b2 && b < 2.0 * (1.0 - c)) return {1.0 - a + b2 / (4.0 * (1.0 - c)), YBranch::neg_interior};
  const double lim = 2.0 * (1.0 + c);
  if (b2 < std::min(lim * lim, k)) return {1.0 + a + b2 / (4.0 * (1.0 + c)), YBranch::neg_plus};
  if (c * (b + 4.0 * a) <= a * b) return {a + b - c, YBranch::r_first};
  if (a * b <= c * (b - 4.0 * a)) return {-a + b + c, YBranch::r_second};
  return {(a + c) * std::sqrt(1.0 - b2 / (4.0 * ac)), YBranch::r_third};
}

double y_value(const YParams& p) { return y_value_detailed(p).value; }

std::string_view y_branch_name(YBranch b) {
  switch (b) {
    case YBranch::sum_abs: return "sum_abs";
    case YBranch::interior: return "interior";
    case YBranch::neg_interior: return "neg_interior";
    case YBranch::neg_plus: return "neg_plus";
    case YBranch::r_first: return "r_first";
    case YBranch::r_second: return "r_second";
    case YBranch::r_third: return "r_third";
  }
  return "unknown";
}

namespace {

struct AngleTables {
  std::vector<double> theta, c1, s1, c2, s2;
};

AngleTables angle_tables(double lo, double step, int n) {
  AngleTables t;
  for (int j = 0; j < n; ++j) {
    const double th = lo + step * j;
    t.theta.push_back(th);
    t.c1.push_back(std::cos(th));
    t.s1.push_back(std::sin(th));
    t.c2.push_back(std::cos(2.0 * th));
    t.s2.push_back(std::sin(2.0 * th));
  }
  return t;
}

std::vector<double> radius_table(double lo, double hi, int n) {
  std::vector<double> r;
  for (int i = 0; i < n; ++i) r.push_back(lo + (hi - lo) * i / (n - 1));
  return r;
}

}  // namespace

YOracleResult y_oracle_detailed(const YParams& p, int resolution) {
  if (resolution < 64) throw std::invalid_argument("y_oracle: resolution must be at least 64");
  const int n = resolution;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  auto run = [&](const std::vector<double>& radii, const AngleTables& t) {
    const kernels::GridMax g = kernels::disk_grid_max({p.a, p.b, p.c, radii, t.c1, t.s1, t.c2, t.s2});
    return std::pair{g, std::pair{radii[g.radius_index], t.theta[g.angle_index]}};
  };

  double r_half = 1.0 / (n - 1);
  double t_half = kTwoPi / n;
  auto [best, at] = run(radius_table(0.0, 1.0, n), angle_tables(0.0, t_half, n));
  for (int pass = 0; pass < 3; ++pass) {
    const double rlo = std::max(0.0, at.first - r_half);
    const double rhi = std::min(1.0, at.first + r_half);
    const double tlo = at.second - t_half;
    const auto [g, loc] = run(radius_table(rlo, rhi, n), angle_tables(tlo, 2.0 * t_half / (n - 1), n));
    if (g.value > best.value) {
      best = g;
      at = loc;
    }
    r_half /= 8.0;
    t_half /= 8.0;
  }
  return {best.value, std::polar(at.first, at.second)};
}

double y_oracle(const YParams& p, int resolution) { return y_oracle_detailed(p, resolution).value; }

std::string_view curve_name(CurveId id) {
  switch (id) {
    case CurveId::H0: return "H0";
    case CurveId::C1_curve: return "C1";
    case CurveId::C4_curve: return "C4";
    case CurveId::H1: return "H1";
  }
  return "unknown";
}

CurveId parse_curve(std::string_view name) {
  for (CurveId id : {CurveId::H0, CurveId::C1_curve, CurveId::C4_curve, CurveId::H1})
    if (curve_name(id) == name) return id;
  throw std::invalid_argument("unknown curve: " + std::string(name));
}

double curve_value(CurveId id, double x) {
  switch (id) {
    case CurveId::H0: return (-x * x - 5.0 * x + 36.0) / 576.0;
    case CurveId::C1_curve: return (7.0 * x * x * x + 128.0 * x * x + 288.0) / 1728.0;
    case CurveId::C4_curve: return (208.0 * x - 83.0 * x * x * x) / 576.0;
    case CurveId::H1: return std::sqrt(400.0 - 7.0 * x * x) * (19.0 * x * x + 48.0) / (576.0 * std::sqrt(93.0));
  }
  throw std::invalid_argument("unknown curve id");
}

IntervalMax max_on_interval(CurveId id, double lo, double hi, Closure closure) {
  if (!(lo < hi)) throw std::invalid_argument("max_on_interval: need lo < hi");
  constexpr int kScan = 512;
  auto f = [id](double x) { return curve_value(id, x); };
  auto sample = [&](int i) { return lo + (hi - lo) * (i + 0.5) / kScan; };

  int best_i = 0;
  double best_v = f(sample(0));
  for (int i = 1; i < kScan; ++i) {
    const double v = f(sample(i));
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  double a = best_i == 0 ? lo : sample(best_i - 1);
  double b = best_i == kScan - 1 ? hi : sample(best_i + 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  double x_star = f1 > f2 ? x1 : x2;
  double v_star = std::max(f1, f2);
  if (best_v > v_star) {
    x_star = sample(best_i);
    v_star = best_v;
  }

  const bool closed = closure == Closure::closed;
  const double v_lo = f(lo);
  const double v_hi = f(hi);
  if (v_lo >= v_star && v_lo >= v_hi) return {lo, v_lo, closed};
  if (v_hi >= v_star) return {hi, v_hi, closed};
  return {x_star, v_star, true};
}

double c4_interval_end() { return 4.0 * std::sqrt(15.0 / 401.0); }

}  // namespace gsg
