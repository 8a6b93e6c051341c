#include <doctest.h>

#include <cmath>
#include <random>

#include "legendra/error.hpp"
#include "legendra/trigform.hpp"

using namespace legendra;

namespace {

TrigPoly x(int i) { return TrigPoly::var(static_cast<Var>(i - 1)); }
const TrigPoly c = TrigPoly::var(Var::C);
const TrigPoly s = TrigPoly::var(Var::S);
PolyForm d(int coord) { return PolyForm::basis(coord); }

PolyVectorField random_field(std::mt19937_64& rng) {
  PolyVectorField X;
  for (auto& f : X.comp) f = random_trig_poly(rng, 3, 2);
  return X;
}

}  // namespace

TEST_CASE("trig polynomials reduce s^2") {
  CHECK(s * s + c * c == TrigPoly(1));
  CHECK((s * s).terms().size() == 2);
  CHECK(s.diff(0) == c);
  CHECK(c.diff(0) == -s);
  CHECK((x(1) * x(1) * x(3)).diff(1) == TrigPoly(2) * x(1) * x(3));
  CHECK((x(3) * x(3)).on_sphere() == TrigPoly(1) - x(1) * x(1) - x(2) * x(2));
  CHECK(std::abs((x(1) * c + s).eval(0.5, {2, 0, 0}) - (2 * std::cos(0.5) + std::sin(0.5))) < 1e-12);
}

TEST_CASE("exterior derivative of the contact form") {
  const PolyForm alpha = contact_form();
  CHECK(exterior_derivative(alpha) == wedge(d(3), d(0)) + TrigPoly(2) * wedge(d(1), d(2)));
  CHECK(exterior_derivative(d(0)).is_zero());
  CHECK(wedge(d(1), d(1)).is_zero());
  CHECK(wedge(d(1), d(2)) == PolyForm() - wedge(d(2), d(1)));
}

TEST_CASE("d squares to zero") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) {
    CHECK(exterior_derivative(exterior_derivative(random_form(rng, 0))).is_zero());
    CHECK(exterior_derivative(exterior_derivative(random_form(rng, 1))).is_zero());
  }
}

TEST_CASE("pullbacks") {
  const PolyForm alpha = contact_form();
  const PolyMap r = PolyMap::rotation();
  const PolyForm expected =
      (x(3) + x(1) * x(1) + x(2) * x(2)) * d(0) + x(1) * d(2) - x(2) * d(1);
  CHECK(pullback(alpha, r) == expected);
  CHECK(pullback(alpha, PolyMap::identity()) == alpha);
  CHECK(pullback(d(0), r) == d(0));
  PolyMap other;
  other.theta_identity = false;
  try {
    pullback(alpha, other);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedMap);
  }
}

TEST_CASE("pullback commutes with d") {
  std::mt19937_64 rng(22);
  const PolyMap r = PolyMap::rotation();
  for (int k = 0; k < 100; ++k) {
    const PolyForm w = random_form(rng, k % 3);
    CHECK(pullback(exterior_derivative(w), r) == exterior_derivative(pullback(w, r)));
  }
}

TEST_CASE("Lie derivative along the radial field") {
  const PolyForm alpha = contact_form();
  const PolyVectorField X = radial_field();
  const PolyForm expected = TrigPoly(2) * x(3) * alpha - (TrigPoly(1) + x(3) * x(3)) * d(0);
  CHECK(lie_derivative(alpha, X).on_sphere() == expected.on_sphere());
  CHECK(lie_derivative(d(0), X).is_zero());
  CHECK(lie_derivative(alpha, PolyVectorField{}).is_zero());
  // i_X alpha vanishes, so the Lie derivative is i_X d alpha.
  CHECK(interior(X, alpha).is_zero());
  CHECK(lie_derivative(alpha, X) == interior(X, exterior_derivative(alpha)));
}

TEST_CASE("Cartan formula agrees with the coordinate formula") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 50; ++k) {
    const PolyVectorField X = random_field(rng);
    const PolyForm w = random_form(rng, k % 3);
    CHECK(lie_derivative(w, X) == lie_derivative_direct(w, X));
  }
}

TEST_CASE("the global section") {
  const PolyVectorField sec = global_section();
  CHECK(interior(sec, contact_form()).coefficient(0).is_zero());
  TrigPoly norm;
  for (const TrigPoly& f : sec.comp) norm += f * f;
  CHECK(norm.on_sphere() == TrigPoly(2));
  const Vector v = sec.eval({0.3, 0, 0, 1});
  CHECK(v == Vector{0, 1, 1, 0});
  for (const Check& ch : verify_section()) {
    INFO(ch.name << ": " << ch.detail);
    CHECK(ch.pass);
  }
}

TEST_CASE("contact condition") {
  const PolyForm alpha = contact_form();
  const PolyForm vol = wedge(alpha, exterior_derivative(alpha));
  CHECK(vol.eval({0.7, 0, 0, 1}, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}) == doctest::Approx(2));
  const PositivityReport rep = verify_contact_positivity(10'000, 42, 1e-9);
  CHECK(rep.pass);
  CHECK(rep.samples == 10'000);
  CHECK(rep.min_value > 1e-9);
  const PositivityReport control = verify_contact_positivity(d(0), 100, 42, 1e-9);
  CHECK_FALSE(control.pass);
  CHECK(control.min_value == doctest::Approx(0));
}

TEST_CASE("identity checks all pass") {
  for (const Check& ch : verify_identities()) {
    INFO(ch.name << ": " << ch.detail);
    CHECK(ch.pass);
  }
}
