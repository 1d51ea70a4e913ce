#include "gsg/derive.hpp"

#include <algorithm>
#include <initializer_list>

#include "gsg/caratheodory.hpp"
#include "gsg/functionals.hpp"
#include "gsg/sg_class.hpp"

namespace gsg {

namespace {

struct Term {
  long num;
  long den;
  Poly::Exponents e;
};

Poly poly_of(std::initializer_list<Term> terms) {
  Poly out;
  for (const Term& t : terms) {
    Poly mono(rat(t.num, t.den));
    for (int k = 0; k < Poly::kVars; ++k)
      for (int j = 0; j < t.e[k]; ++j) mono *= Poly::var(k + 1);
    out += mono;
  }
  return out;
}

std::array<Poly, 5> p_vars() {
  return {Poly::var(1), Poly::var(2), Poly::var(3), Poly::var(4), Poly::var(5)};
}

void add_check(std::vector<FormulaCheck>& out, std::string name, std::string vars, const Poly& derived,
               const Poly& reference) {
  out.push_back({std::move(name), std::move(vars), derived, reference, derived == reference});
}

// Schwarz coefficients of w = (p - 1)/(p + 1).
std::vector<Poly> w_reference() {
  return {
      poly_of({{1, 2, exps(1)}}),
      poly_of({{1, 2, exps(0, 1)}, {-1, 4, exps(2)}}),
      poly_of({{1, 2, exps(0, 0, 1)}, {-1, 2, exps(1, 1)}, {1, 8, exps(3)}}),
      poly_of({{1, 2, exps(0, 0, 0, 1)}, {-1, 2, exps(1, 0, 1)}, {3, 8, exps(2, 1)}, {-1, 4, exps(0, 2)},
               {-1, 16, exps(4)}}),
      poly_of({{1, 2, exps(0, 0, 0, 0, 1)}, {-1, 4, exps(3, 1)}, {3, 8, exps(1, 2)}, {3, 8, exps(2, 0, 1)},
               {-1, 2, exps(0, 1, 1)}, {-1, 2, exps(1, 0, 0, 1)}, {1, 32, exps(5)}}),
  };
}

// Coefficients of Psi(w(z)) in p1..p5.
std::vector<Poly> psi_w_reference() {
  return {
      poly_of({{1, 4, exps(1)}}),
      poly_of({{-7, 48, exps(2)}, {12, 48, exps(0, 1)}}),
      poly_of({{17, 192, exps(3)}, {-56, 192, exps(1, 1)}, {48, 192, exps(0, 0, 1)}}),
      poly_of({{-649, 11520, exps(4)}, {3060, 11520, exps(2, 1)}, {-3360, 11520, exps(1, 0, 1)},
               {-1680, 11520, exps(0, 2)}, {2880, 11520, exps(0, 0, 0, 1)}}),
      poly_of({{1739, 46080, exps(5)}, {-10384, 46080, exps(3, 1)}, {12240, 46080, exps(2, 0, 1)},
               {12240, 46080, exps(1, 2)}, {-13440, 46080, exps(0, 1, 1)}, {-13440, 46080, exps(1, 0, 0, 1)},
               {11520, 46080, exps(0, 0, 0, 0, 1)}}),
  };
}

// z f'/f in a2..a6, with variable k standing for a_{k+1}.
std::vector<Poly> log_derivative_reference() {
  return {
      poly_of({{1, 1, exps(1)}}),
      poly_of({{-1, 1, exps(2)}, {2, 1, exps(0, 1)}}),
      poly_of({{1, 1, exps(3)}, {-3, 1, exps(1, 1)}, {3, 1, exps(0, 0, 1)}}),
      poly_of({{-1, 1, exps(4)}, {4, 1, exps(2, 1)}, {-2, 1, exps(0, 2)}, {-4, 1, exps(1, 0, 1)},
               {4, 1, exps(0, 0, 0, 1)}}),
      poly_of({{1, 1, exps(5)}, {-5, 1, exps(3, 1)}, {5, 1, exps(1, 2)}, {5, 1, exps(2, 0, 1)},
               {-5, 1, exps(0, 1, 1)}, {-5, 1, exps(1, 0, 0, 1)}, {5, 1, exps(0, 0, 0, 0, 1)}}),
  };
}

Poly beta4_printed() {
  return poly_of({{-649, 92160, exps(4)}, {-1680, 92160, exps(0, 2)}, {-3360, 92160, exps(1, 0, 1)},
                  {3060, 92160, exps(2, 1)}, {2280, 92160, exps(0, 0, 0, 1)}});
}

Poly beta4_factored() {
  Poly inner = poly_of({{649, 2880, exps(4)}, {7, 12, exps(0, 2)}, {7, 6, exps(1, 0, 1)}, {-17, 16, exps(2, 1)},
                        {-1, 1, exps(0, 0, 0, 1)}});
  return Poly(rat(-1, 32)) * inner;
}

}  // namespace

bool DerivationReport::all_agree() const {
  return std::all_of(checks.begin(), checks.end(), [](const FormulaCheck& c) { return c.agrees; });
}

DerivationReport derive_formulas() {
  DerivationReport report;
  auto& checks = report.checks;
  const std::array<Poly, 5> pv = p_vars();

  std::vector<Poly> pc{Poly(1L)};
  for (const Poly& v : pv) pc.push_back(v);
  const Series<Poly> p(std::move(pc));
  const Series<Poly> w = p_to_w(p);
  const Series<Poly> psi_w = ps_compose(psi_series<Poly>(5), w);

  const auto w_ref = w_reference();
  const auto psi_ref = psi_w_reference();
  for (int n = 1; n <= 5; ++n) {
    add_check(checks, "w" + std::to_string(n), "p", w[n], w_ref[n - 1]);
    add_check(checks, "psi_w" + std::to_string(n), "p", psi_w[n], psi_ref[n - 1]);
  }

  // Series route for a_n, beta_n, A_n in p1..p5.
  const SGFunction<Poly> g = f_from_w(w, 6, "symbolic");
  const CoeffSetT<Poly> series = coeffs_from_series(g.f);
  const std::array<Poly, 5> a_closed = a_from_p(pv);
  const std::array<Poly, 4> beta_closed = beta_from_p(pv);
  const std::array<Poly, 3> inv_closed = inverse_from_p(pv);
  for (int n = 0; n < 5; ++n) add_check(checks, "a" + std::to_string(n + 2), "p", series.a[n], a_closed[n]);
  for (int n = 0; n < 4; ++n)
    add_check(checks, "beta" + std::to_string(n + 1), "p", series.beta[n], beta_closed[n]);
  for (int n = 0; n < 3; ++n) add_check(checks, "A" + std::to_string(n + 2), "p", series.inv[n], inv_closed[n]);

  // Rearranged forms used when bounding the functionals.
  const Poly& p1 = pv[0];
  const Poly& p2 = pv[1];
  add_check(checks, "a3_rearranged", "p", series.a[1],
            Poly(rat(1, 8)) * (p2 - Poly(rat(1, 3)) * p1 * p1));
  add_check(checks, "a4_rearranged", "p", series.a[2],
            poly_of({{1, 12, exps(0, 0, 1)}, {-19, 288, exps(1, 1)}, {1, 72, exps(3)}}));
  add_check(checks, "a6_split", "p", series.a[4],
            Poly(rat(41, 960)) * p1 *
                    poly_of({{2267, 29520, exps(4)}, {779, 984, exps(0, 2)}, {181, 246, exps(1, 0, 1)},
                             {-15677, 29520, exps(2, 1)}, {-1, 1, exps(0, 0, 0, 1)}}) +
                Poly(rat(1, 20)) * poly_of({{1, 1, exps(0, 0, 0, 0, 1)}, {-23, 24, exps(0, 1, 1)}}));
  add_check(checks, "a2a3_minus_a4", "p", series.a[0] * series.a[1] - series.a[2],
            poly_of({{-24, 288, exps(0, 0, 1)}, {28, 288, exps(1, 1)}, {-7, 288, exps(3)}}));
  add_check(checks, "a2a4_minus_a3sq", "p", series.a[0] * series.a[2] - series.a[1] * series.a[1],
            poly_of({{2, 1152, exps(4)}, {-7, 1152, exps(2, 1)}, {-18, 1152, exps(0, 2)}, {24, 1152, exps(1, 0, 1)}}));
  add_check(checks, "beta3_rearranged", "p", series.beta[2],
            poly_of({{1, 24, exps(0, 0, 1)}, {-7, 144, exps(1, 1)}, {17, 1152, exps(3)}}));
  add_check(checks, "beta4_factored", "p", series.beta[3], beta4_factored());

  // Identities in a2..a6 (variable k stands for a_{k+1}).
  std::vector<Poly> fc{Poly(), Poly(1L)};
  for (const Poly& v : pv) fc.push_back(v);
  const Series<Poly> f_sym(std::move(fc));
  const Series<Poly> zf_over_f = log_derivative(f_sym);
  const auto ld_ref = log_derivative_reference();
  for (int n = 1; n <= 5; ++n)
    add_check(checks, "zf'/f_" + std::to_string(n), "a", zf_over_f[n], ld_ref[n - 1]);
  const CoeffSetT<Poly> sym = coeffs_from_series(f_sym);
  const std::array<Poly, 4> beta_a = beta_from_a(pv);
  const std::array<Poly, 3> inv_a = inverse_from_a(pv);
  for (int n = 0; n < 4; ++n)
    add_check(checks, "beta" + std::to_string(n + 1) + "_from_a", "a", sym.beta[n], beta_a[n]);
  for (int n = 0; n < 3; ++n) add_check(checks, "A" + std::to_string(n + 2) + "_from_a", "a", sym.inv[n], inv_a[n]);

  Beta4Resolution& b4 = report.beta4;
  b4.derived_p4_coefficient = series.beta[3].coeff(exps(0, 0, 0, 1));
  b4.factored_p4_coefficient = beta4_factored().coeff(exps(0, 0, 0, 1));
  b4.printed_constant = 2280;
  const Rational scaled = b4.derived_p4_coefficient * 92160;
  b4.resolved_constant = scaled.get_den() == 1 ? scaled.get_num().get_si() : 0;
  b4.printed_consistent = series.beta[3] == beta4_printed();
  b4.factored_consistent = series.beta[3] == beta4_factored();
  return report;
}

nlohmann::json to_json(const DerivationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"variables", c.variables},
                      {"derived", c.derived.to_string()},
                      {"reference", c.reference.to_string()},
                      {"agrees", c.agrees}});
  }
  const auto& b = r.beta4;
  return {{"checks", checks},
          {"all_agree", r.all_agree()},
          {"beta4_resolution",
           {{"derived_p4_coefficient", to_string(b.derived_p4_coefficient)},
            {"factored_p4_coefficient", to_string(b.factored_p4_coefficient)},
            {"printed_constant", b.printed_constant},
            {"resolved_constant", b.resolved_constant},
            {"printed_consistent", b.printed_consistent},
            {"factored_consistent", b.factored_consistent}}}};
}

}  // namespace gsg
