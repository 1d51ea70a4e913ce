#include "gsg/caratheodory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gsg {

HerglotzAtoms::HerglotzAtoms(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("HerglotzAtoms: at least one atom required");
  double sum = 0.0;
  for (const Atom& a : atoms_) {
    if (!std::isfinite(a.weight) || !std::isfinite(a.theta))
      throw std::invalid_argument("HerglotzAtoms: non-finite weight or angle");
    if (a.weight < 0.0) throw std::invalid_argument("HerglotzAtoms: negative weight");
    sum += a.weight;
  }
  const double dev = std::abs(sum - 1.0);
  if (dev > kRenormalizeTol)
    throw std::invalid_argument("HerglotzAtoms: weights sum to " + std::to_string(sum) + ", not 1");
  if (dev > kSumTol)
    for (Atom& a : atoms_) a.weight /= sum;
}

HerglotzAtoms HerglotzAtoms::rotated(double phi) const {
  std::vector<Atom> out = atoms_;
  for (Atom& a : out) a.theta -= phi;
  return HerglotzAtoms(std::move(out));
}

HerglotzAtoms HerglotzAtoms::normalized() const {
  Complex p1{0.0, 0.0};
  for (const Atom& a : atoms_) p1 += 2.0 * a.weight * std::polar(1.0, a.theta);
  if (std::abs(p1) == 0.0) return *this;
  return rotated(std::arg(p1));
}

Series<Complex> herglotz_series(const HerglotzAtoms& atoms, int n_max) {
  if (n_max < 0) throw std::invalid_argument("herglotz_series: negative order");
  std::vector<Complex> c(n_max + 1, Complex{0.0, 0.0});
  c[0] = 1.0;
  for (const Atom& a : atoms.atoms()) {
    const Complex u = std::polar(1.0, a.theta);
    Complex un = u;
    for (int n = 1; n <= n_max; ++n) {
      c[n] += 2.0 * a.weight * un;
      un *= u;
    }
  }
  return Series<Complex>(std::move(c));
}

std::pair<Complex, Complex> lemma1_reconstruct(const Lemma1Params& params) {
  constexpr double tol = 1e-12;
  const double s = params.p1;
  if (!(s >= -tol && s <= 2.0 + tol)) throw std::invalid_argument("lemma1_reconstruct: p1 outside [0, 2]");
  if (std::abs(params.x) > 1.0 + tol) throw std::invalid_argument("lemma1_reconstruct: |x| > 1");
  if (std::abs(params.y) > 1.0 + tol) throw std::invalid_argument("lemma1_reconstruct: |y| > 1");
  const Complex x = params.x;
  const Complex y = params.y;
  const double d = 4.0 - s * s;
  const Complex p2 = (s * s + x * d) / 2.0;
  const Complex p3 =
      (s * s * s + 2.0 * d * s * x - s * d * x * x + 2.0 * d * (1.0 - std::norm(x)) * y) / 4.0;
  return {p2, p3};
}

void to_json(nlohmann::json& j, const HerglotzAtoms& atoms) {
  j = nlohmann::json::array();
  for (const Atom& a : atoms.atoms()) j.push_back({{"t", a.weight}, {"theta", a.theta}});
}

HerglotzAtoms atoms_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("atoms JSON must be an array of {t, theta}");
  std::vector<Atom> atoms;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("t") || !item.contains("theta"))
      throw std::invalid_argument("atom entry must be an object with keys t and theta");
    atoms.push_back({item.at("t").get<double>(), item.at("theta").get<double>()});
  }
  return HerglotzAtoms(std::move(atoms));
}

}  // namespace gsg
