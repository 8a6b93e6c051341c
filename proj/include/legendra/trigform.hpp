#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace legendra {

// Exact calculus on S1 x R3 with coordinates (theta, x1, x2, x3).
// Coefficients are integer polynomials in x1, x2, x3, c = cos(theta),
// s = sin(theta), kept with s-degree <= 1 by s^2 = 1 - c^2.

enum class Var { X1 = 0, X2 = 1, X3 = 2, C = 3, S = 4 };

struct Monomial {
  std::array<std::uint8_t, 5> exp{};  // x1 x2 x3 c s
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(long long constant);  // NOLINT: integers read naturally as polys
  static TrigPoly var(Var v);
  static TrigPoly term(const Monomial& m, long long coef);

  const std::map<Monomial, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TrigPoly operator-() const;
  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  TrigPoly& operator+=(const TrigPoly& b) { return *this = *this + b; }
  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

  // Partial derivative along coordinate 0 = theta, 1..3 = x1..x3.
  TrigPoly diff(int coord) const;
  // Replaces x3^2 by 1 - x1^2 - x2^2 until x3 has degree <= 1.
  TrigPoly on_sphere() const;
  // x_i replaced by the given polynomials (c, s untouched).
  TrigPoly substitute(const std::array<TrigPoly, 3>& x) const;
  double eval(double theta, const std::array<double, 3>& x) const;
  std::string str() const;

 private:
  void add_term(const Monomial& m, long long coef);
  std::map<Monomial, long long> terms_;
};

using Point = std::array<double, 4>;   // (theta, x1, x2, x3)
using Vector = std::array<double, 4>;  // components along d_theta, d_1, d_2, d_3

class PolyVectorField {
 public:
  std::array<TrigPoly, 4> comp;  // d_theta, d_1, d_2, d_3

  Vector eval(const Point& p) const;
  // X(f)
  TrigPoly apply(const TrigPoly& f) const;
};

// A map (theta, x) -> (theta, F(theta, x)). Only maps that keep theta are
// representable; `theta_identity` = false stands for anything else.
struct PolyMap {
  bool theta_identity = true;
  std::array<TrigPoly, 3> x;

  static PolyMap identity();
  // r(theta, x) = (theta, rotation of x about the x3-axis by theta)
  static PolyMap rotation();
};

// Differential form; basis k-forms are bitmasks over (dtheta, dx1, dx2, dx3)
// in increasing index order, so antisymmetry is structural.
class PolyForm {
 public:
  explicit PolyForm(int degree = 0) : degree_(degree) {}
  static PolyForm function(const TrigPoly& f);
  static PolyForm basis(int coord);  // dtheta (0) or dx_i (1..3)
  static PolyForm from_terms(int degree, const std::map<unsigned, TrigPoly>& terms);

  int degree() const { return degree_; }
  const std::map<unsigned, TrigPoly>& terms() const { return coef_; }
  TrigPoly coefficient(unsigned mask) const;
  bool is_zero() const { return coef_.empty(); }

  friend PolyForm operator+(const PolyForm& a, const PolyForm& b);
  friend PolyForm operator-(const PolyForm& a, const PolyForm& b);
  friend PolyForm operator*(const TrigPoly& f, const PolyForm& w);
  friend bool operator==(const PolyForm&, const PolyForm&) = default;

  PolyForm on_sphere() const;
  // Value on `vectors` (as many as the degree) at p.
  double eval(const Point& p, const std::vector<Vector>& vectors) const;
  std::string str() const;

 private:
  void add(unsigned mask, const TrigPoly& f);
  int degree_;
  std::map<unsigned, TrigPoly> coef_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm exterior_derivative(const PolyForm& w);
PolyForm interior(const PolyVectorField& X, const PolyForm& w);
// Throws Error{UnsupportedMap} unless the map keeps theta.
PolyForm pullback(const PolyForm& w, const PolyMap& f);
// i_X dw + d i_X w
PolyForm lie_derivative(const PolyForm& w, const PolyVectorField& X);
// Coordinate formula: X(f) dx_I + f sum_k dx_i1 ^ .. ^ d(X_ik) ^ .. ; used
// to cross-check the Cartan formula.
PolyForm lie_derivative_direct(const PolyForm& w, const PolyVectorField& X);

// The objects of the construction.
PolyForm contact_form();          // x3 dtheta + x1 dx2 - x2 dx1
PolyVectorField radial_field();   // x1 x3 d1 + x2 x3 d2 + (x3^2 - 1) d3
PolyVectorField global_section(); // (x2 - x1) dtheta + x3 d1 + x3 d2 - (x1 + x2) d3

// Random polynomial of `terms` monomials (each x_i of degree <= max_degree,
// c and s of degree <= 2, coefficients in -5..5); for property tests.
TrigPoly random_trig_poly(std::mt19937_64& rng, int terms = 4, int max_degree = 3);
PolyForm random_form(std::mt19937_64& rng, int degree);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Exact identities: pullback of the contact form under r, its Lie
// derivative along the radial field, and the global section checks.
std::vector<Check> verify_identities();
std::vector<Check> verify_section();

struct PositivityReport {
  bool pass = false;
  std::size_t samples = 0;
  double min_value = 0;
  Point witness{};  // sample with the smallest value
};

// Samples points of S1 x S2 and evaluates (w ^ dw) on the oriented frame
// (d_theta, e1, e2), where (normal, e1, e2) is a positive orthonormal frame
// of R3. Passes when every value exceeds `tolerance` (frames have volume 1).
PositivityReport verify_contact_positivity(std::size_t samples, std::uint64_t seed, double tolerance);
PositivityReport verify_contact_positivity(const PolyForm& w, std::size_t samples, std::uint64_t seed,
                                           double tolerance);

}  // namespace legendra
