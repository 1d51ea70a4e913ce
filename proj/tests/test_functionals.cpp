#include <doctest.h>

#include "gsg/functionals.hpp"
#include "test_support.hpp"

using namespace gsg;

namespace {

Series<Rational> random_normalized(std::mt19937_64& rng, int order) {
  auto s = gsg::testing::random_rational_series(rng, order, true);
  std::vector<Rational> c(s.coeffs().begin(), s.coeffs().end());
  c[1] = 1;
  return Series<Rational>(c);
}

}  // namespace

TEST_CASE("functionals: names round trip") {
  for (FunctionalId id : all_functionals()) CHECK(parse_functional(functional_name(id)) == id);
  CHECK(parse_functional("fekete_szego") == FunctionalId::fekete_szego);
  CHECK_THROWS_AS(parse_functional("a7"), std::invalid_argument);
}

TEST_CASE("functionals: logarithmic coefficients from a agree with log(f/z)") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_normalized(rng, 6);
    const std::array<Rational, 5> a{f[2], f[3], f[4], f[5], f[6]};
    const auto beta = beta_from_a(a);
    const auto series = log_coeffs(f, 4);
    for (int n = 0; n < 4; ++n) CHECK(beta[n] == series[n]);
  }
}

TEST_CASE("functionals: inverse coefficients from a agree with reversion") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_normalized(rng, 6);
    const std::array<Rational, 5> a{f[2], f[3], f[4], f[5], f[6]};
    const auto inv = inverse_from_a(a);
    const auto series = inverse_coeffs(f, 3);
    for (int n = 0; n < 3; ++n) CHECK(inv[n] == series[n]);
  }
  // Koebe function z/(1-z)^2.
  const std::array<Rational, 5> koebe{2, 3, 4, 5, 6};
  const auto inv = inverse_from_a(koebe);
  CHECK(inv[0] == -2);
  CHECK(inv[1] == 5);
  CHECK(inv[2] == -14);
  const auto beta = beta_from_a(koebe);
  for (int n = 0; n < 4; ++n) CHECK(beta[n] == rat(1, n + 1));
}

TEST_CASE("functionals: Hankel determinant expansion equals the 3x3 determinant") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    std::array<Rational, 5> a;
    for (auto& x : a) x = gsg::testing::random_rational(rng);
    const std::array<Rational, 6> full{1, a[0], a[1], a[2], a[3], a[4]};
    CHECK(h31_expansion(a) == hankel_det<Rational>(std::span<const Rational>(full), 3, 1));
    // H2(2) = a2 a4 - a3^2.
    Rational h22 = a[0] * a[2] - a[1] * a[1];
    CHECK(hankel_det<Rational>(std::span<const Rational>(full), 2, 2) == h22);
  }
  CHECK_THROWS(hankel_det<Rational>(std::span<const Rational>(), 7, 1));
}

TEST_CASE("functionals: H3(1) of f_2") {
  const CoeffSetT<Rational> c = coeffs_from_a<Rational>({0, rat(1, 4), 0, rat(1, 96), 0});
  CHECK(functional_eval(FunctionalId::h31, c) == rat(-5, 384));
  CHECK(functional_eval(FunctionalId::h22, c) == rat(-1, 16));
}

TEST_CASE("functionals: closed forms in p agree across routes on random atoms") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const auto atoms = gsg::testing::random_atoms(rng);
    const CoeffSet c = coeffs_from_atoms(atoms);
    const CoeffSet s = coeffs_from_atoms_series(atoms);
    for (int n = 0; n < 4; ++n) CHECK(std::abs(c.beta[n] - s.beta[n]) < 1e-12);
    for (int n = 0; n < 3; ++n) CHECK(std::abs(c.inv[n] - s.inv[n]) < 1e-12);
    const auto p = p_moments(atoms);
    const auto bp = beta_from_p(p);
    const auto ip = inverse_from_p(p);
    for (int n = 0; n < 4; ++n) CHECK(std::abs(bp[n] - c.beta[n]) < 1e-12);
    for (int n = 0; n < 3; ++n) CHECK(std::abs(ip[n] - c.inv[n]) < 1e-12);
  }
}

TEST_CASE("functionals: bounds table") {
  CHECK(lookup_bound(FunctionalId::a2).bound == rat(1, 2));
  CHECK(lookup_bound(FunctionalId::a5).bound == rat(1, 8));
  const auto& a6 = lookup_bound(FunctionalId::a6);
  CHECK(a6.bound == rat(13, 48));
  CHECK_FALSE(a6.sharp);
  CHECK(lookup_bound(FunctionalId::a6, BoundStatus::conjectured).bound == rat(1, 10));
  const auto& h31 = lookup_bound(FunctionalId::h31);
  CHECK(h31.bound == rat(43, 576));
  CHECK(h31.note == "bound from triangle inequality, not known sharp");
  CHECK(lookup_bound(FunctionalId::inv4).bound == rat(31, 72));
  CHECK_FALSE(lookup_bound(FunctionalId::inv4).sharp);
  for (int n = 1; n <= 4; ++n) {
    const auto& b = lookup_bound(static_cast<FunctionalId>(static_cast<int>(FunctionalId::beta1) + n - 1));
    CHECK(b.bound == rat(1, 4 * n));
    CHECK(b.witness == n);
  }
  CHECK_THROWS_AS(lookup_bound(FunctionalId::fekete_szego), std::out_of_range);
}

TEST_CASE("functionals: every sharp witness attains its bound exactly") {
  for (const BoundRecord& rec : bounds_table()) {
    if (!rec.sharp) continue;
    REQUIRE(rec.witness.has_value());
    const auto f = extremal_f<Rational>(*rec.witness, 8).f;
    const CoeffSetT<Rational> c = coeffs_from_series(f);
    const Rational v = functional_eval(rec.id, c);
    CHECK_MESSAGE(abs(v) == rec.bound, functional_name(rec.id));
  }
}

TEST_CASE("functionals: Fekete-Szego bound") {
  CHECK(fekete_szego_bound(rat(0)) == rat(1, 4));
  CHECK(fekete_szego_bound(rat(1, 3)) == rat(1, 4));
  CHECK(fekete_szego_bound(rat(1)) == rat(1, 4));
  CHECK(fekete_szego_bound(rat(3)) == rat(2, 3));
  CHECK(fekete_szego_bound(rat(-2)) == rat(7, 12));
  CHECK(std::abs(fekete_szego_bound(Complex(3.0, 0.0)) - 2.0 / 3.0) < 1e-15);
}

TEST_CASE("functionals: de Branges and Lowner") {
  const std::array<Complex, 4> koebe{1.0, 0.5, 1.0 / 3.0, 0.25};
  for (int n = 1; n <= 4; ++n) {
    const auto r = debranges_check(koebe, n);
    CHECK(r.holds);
    CHECK(std::abs(r.lhs - r.rhs) < 1e-12);
  }
  const std::array<Complex, 1> big{2.0};
  CHECK_FALSE(debranges_check(big, 1).holds);
  CHECK(lowner_bound(2) == 2);
  CHECK(lowner_bound(3) == 5);
  CHECK(lowner_bound(4) == 14);
  CHECK(lowner_bound(5) == 42);
}

TEST_CASE("functionals: serialization") {
  const auto j = bounds_json();
  REQUIRE(j.is_array());
  bool found = false;
  for (const auto& rec : j)
    if (rec["functional_id"] == "h22") {
      found = true;
      CHECK(rec["bound"] == "1/16");
    }
  CHECK(found);
  const std::string csv = bounds_csv();
  CHECK(csv.rfind("functional_id,bound_num,bound_den,sharp,witness,ref,status\n", 0) == 0);
}
