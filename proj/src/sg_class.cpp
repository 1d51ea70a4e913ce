#include "gsg/sg_class.hpp"

#include <complex>

#include "gsg/caratheodory.hpp"
#include "gsg/functionals.hpp"

namespace gsg {

std::array<Complex, 5> p_moments(const HerglotzAtoms& atoms) {
  std::array<Complex, 5> p{};
  for (const Atom& a : atoms.atoms()) {
    const Complex u = std::polar(1.0, a.theta);
    Complex un = u;
    for (int n = 0; n < 5; ++n) {
      p[n] += 2.0 * a.weight * un;
      un *= u;
    }
  }
  return p;
}

CoeffSet coeffs_from_atoms(const HerglotzAtoms& atoms) { return coeffs_from_p(p_moments(atoms)); }

CoeffSet coeffs_from_atoms_series(const HerglotzAtoms& atoms, int order) {
  const Series<Complex> p = herglotz_series(atoms, order);
  const SGFunction<Complex> g = f_from_w(p_to_w(p), order, "atoms");
  return coeffs_from_series(g.f);
}

}  // namespace gsg
