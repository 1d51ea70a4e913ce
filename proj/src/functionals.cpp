#include "gsg/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gsg {

namespace {

struct NamedFunctional {
  FunctionalId id;
  std::string_view name;
};

constexpr NamedFunctional kNames[] = {
    {FunctionalId::a2, "a2"},
    {FunctionalId::a3, "a3"},
    {FunctionalId::a4, "a4"},
    {FunctionalId::a5, "a5"},
    {FunctionalId::a6, "a6"},
    {FunctionalId::beta1, "beta1"},
    {FunctionalId::beta2, "beta2"},
    {FunctionalId::beta3, "beta3"},
    {FunctionalId::beta4, "beta4"},
    {FunctionalId::inv2, "A2"},
    {FunctionalId::inv3, "A3"},
    {FunctionalId::inv4, "A4"},
    {FunctionalId::a2a3_minus_a4, "a2a3_minus_a4"},
    {FunctionalId::h22, "h22"},
    {FunctionalId::h31, "h31"},
    {FunctionalId::fekete_szego, "fs"},
};

constexpr FunctionalId kAll[] = {
    FunctionalId::a2,    FunctionalId::a3,    FunctionalId::a4,    FunctionalId::a5,
    FunctionalId::a6,    FunctionalId::beta1, FunctionalId::beta2, FunctionalId::beta3,
    FunctionalId::beta4, FunctionalId::inv2,  FunctionalId::inv3,  FunctionalId::inv4,
    FunctionalId::a2a3_minus_a4, FunctionalId::h22, FunctionalId::h31, FunctionalId::fekete_szego,
};

BoundRecord sharp_record(FunctionalId id, Rational bound, int witness, std::string ref) {
  return {id, std::move(bound), true, witness, std::move(ref), BoundStatus::proven, ""};
}

std::vector<BoundRecord> make_table() {
  const std::string coeff_ref = "coefficient theorem";
  const std::string second_ref = "second-order functional theorem";
  const std::string log_ref = "logarithmic coefficient theorem";
  const std::string inv_ref = "inverse coefficient theorem";
  std::vector<BoundRecord> t;
  t.push_back(sharp_record(FunctionalId::a2, rat(1, 2), 1, coeff_ref));
  t.push_back(sharp_record(FunctionalId::a3, rat(1, 4), 2, coeff_ref));
  t.push_back(sharp_record(FunctionalId::a4, rat(1, 6), 3, coeff_ref));
  t.push_back(sharp_record(FunctionalId::a5, rat(1, 8), 4, coeff_ref));
  t.push_back({FunctionalId::a6, rat(13, 48), false, std::nullopt, coeff_ref, BoundStatus::proven,
               "not known to be sharp"});
  t.push_back({FunctionalId::a6, rat(1, 10), false, 5, "a6 conjecture", BoundStatus::conjectured,
               "attained by f5; open whether it bounds the class"});
  t.push_back(sharp_record(FunctionalId::a2a3_minus_a4, rat(1, 6), 3, second_ref));
  t.push_back(sharp_record(FunctionalId::h22, rat(1, 16), 2, second_ref));
  t.push_back({FunctionalId::h31, rat(43, 576), false, std::nullopt, "third Hankel determinant remark",
               BoundStatus::proven, "bound from triangle inequality, not known sharp"});
  t.push_back(sharp_record(FunctionalId::beta1, rat(1, 4), 1, log_ref));
  t.push_back(sharp_record(FunctionalId::beta2, rat(1, 8), 2, log_ref));
  t.push_back(sharp_record(FunctionalId::beta3, rat(1, 12), 3, log_ref));
  t.push_back(sharp_record(FunctionalId::beta4, rat(1, 16), 4, log_ref));
  t.push_back(sharp_record(FunctionalId::inv2, rat(1, 2), 1, inv_ref));
  t.push_back(sharp_record(FunctionalId::inv3, rat(5, 12), 1, inv_ref));
  t.push_back({FunctionalId::inv4, rat(31, 72), false, std::nullopt, inv_ref, BoundStatus::proven,
               "not flagged sharp; f1 gives |A4| = 31/72"});
  return t;
}

}  // namespace

std::string_view functional_name(FunctionalId id) {
  for (const auto& n : kNames)
    if (n.id == id) return n.name;
  throw std::invalid_argument("unknown functional id");
}

FunctionalId parse_functional(std::string_view name) {
  for (const auto& n : kNames)
    if (n.name == name) return n.id;
  if (name == "fekete_szego") return FunctionalId::fekete_szego;
  throw std::invalid_argument("unknown functional '" + std::string(name) + "'");
}

std::span<const FunctionalId> all_functionals() { return kAll; }

double functional_magnitude(FunctionalId id, const CoeffSet& c, Complex mu) {
  return std::abs(functional_eval<Complex>(id, c, mu));
}

std::string_view status_name(BoundStatus s) {
  return s == BoundStatus::proven ? "proven" : "conjectured";
}

const std::vector<BoundRecord>& bounds_table() {
  static const std::vector<BoundRecord> table = make_table();
  return table;
}

const BoundRecord& lookup_bound(FunctionalId id, BoundStatus status) {
  for (const auto& r : bounds_table())
    if (r.id == id && r.status == status) return r;
  throw std::out_of_range("no " + std::string(status_name(status)) + " bound for functional " +
                          std::string(functional_name(id)));
}

Rational fekete_szego_bound(const Rational& mu) {
  Rational d = abs(mu - rat(1, 3));
  Rational m = d > 1 ? d : Rational(1);
  return m / 4;
}

double fekete_szego_bound(Complex mu) {
  return 0.25 * std::max(1.0, std::abs(mu - Complex(1.0 / 3.0, 0.0)));
}

nlohmann::json bounds_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : bounds_table()) {
    nlohmann::json j;
    j["functional_id"] = functional_name(r.id);
    j["bound"] = to_string(r.bound);
    j["bound_num"] = r.bound.get_num().get_str();
    j["bound_den"] = r.bound.get_den().get_str();
    j["bound_value"] = to_double(r.bound);
    j["sharp"] = r.sharp;
    j["witness"] = r.witness ? nlohmann::json("f" + std::to_string(*r.witness)) : nlohmann::json(nullptr);
    j["ref"] = r.ref;
    j["status"] = status_name(r.status);
    j["note"] = r.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string bounds_csv() {
  std::ostringstream os;
  os << "functional_id,bound_num,bound_den,sharp,witness,ref,status\n";
  for (const auto& r : bounds_table()) {
    os << functional_name(r.id) << ',' << r.bound.get_num().get_str() << ',' << r.bound.get_den().get_str() << ','
       << (r.sharp ? "true" : "false") << ',' << (r.witness ? "f" + std::to_string(*r.witness) : "") << ','
       << r.ref << ',' << status_name(r.status) << '\n';
  }
  return os.str();
}

DeBrangesResult debranges_check(std::span<const Complex> beta, int n) {
  if (n < 1 || static_cast<int>(beta.size()) < n)
    throw std::invalid_argument("debranges_check: need beta_1..beta_n");
  double lhs = 0.0;
  double rhs = 0.0;
  for (int k = 1; k <= n; ++k) {
    lhs += k * (n - k + 1) * std::norm(beta[k - 1]);
    rhs += static_cast<double>(n - k + 1) / k;
  }
  return {lhs, rhs, lhs <= rhs + 1e-12};
}

long long lowner_bound(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("lowner_bound: n must be in 1..30");
  // Catalan recurrence C_n = C_{n-1} * 2(2n-1) / (n+1), exact in integers.
  long long c = 1;
  for (int k = 1; k <= n; ++k) c = c * 2 * (2 * k - 1) / (k + 1);
  return c;
}

}  // namespace gsg
