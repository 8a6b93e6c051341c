#include "legendra/trigform.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "legendra/error.hpp"

namespace legendra {

namespace {
constexpr int kC = static_cast<int>(Var::C);
constexpr int kS = static_cast<int>(Var::S);
constexpr int kX3 = static_cast<int>(Var::X3);
}  // namespace

// ---- TrigPoly ----

TrigPoly::TrigPoly(long long constant) {
  if (constant != 0) terms_[Monomial{}] = constant;
}

TrigPoly TrigPoly::var(Var v) {
  Monomial m;
  m.exp[static_cast<std::size_t>(v)] = 1;
  return term(m, 1);
}

TrigPoly TrigPoly::term(const Monomial& m, long long coef) {
  TrigPoly p;
  p.add_term(m, coef);
  return p;
}

void TrigPoly::add_term(const Monomial& m, long long coef) {
  if (coef == 0) return;
  if (m.exp[kS] >= 2) {
    // s^2 = 1 - c^2
    Monomial lower = m;
    lower.exp[kS] = static_cast<std::uint8_t>(lower.exp[kS] - 2);
    add_term(lower, coef);
    lower.exp[kC] = static_cast<std::uint8_t>(lower.exp[kC] + 2);
    add_term(lower, -coef);
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) { return a + (-b); }

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (std::size_t k = 0; k < 5; ++k) m.exp[k] = static_cast<std::uint8_t>(ma.exp[k] + mb.exp[k]);
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

TrigPoly TrigPoly::diff(int coord) const {
  TrigPoly r;
  for (const auto& [m, c] : terms_) {
    if (coord == 0) {
      // d/dtheta c^a s^b = -a c^(a-1) s^(b+1) + b c^(a+1) s^(b-1)
      const int a = m.exp[kC];
      const int b = m.exp[kS];
      if (a > 0) {
        Monomial n = m;
        n.exp[kC] = static_cast<std::uint8_t>(a - 1);
        n.exp[kS] = static_cast<std::uint8_t>(b + 1);
        r.add_term(n, -a * c);
      }
      if (b > 0) {
        Monomial n = m;
        n.exp[kC] = static_cast<std::uint8_t>(a + 1);
        n.exp[kS] = static_cast<std::uint8_t>(b - 1);
        r.add_term(n, b * c);
      }
    } else {
      const std::size_t v = static_cast<std::size_t>(coord - 1);
      const int e = m.exp[v];
      if (e == 0) continue;
      Monomial n = m;
      n.exp[v] = static_cast<std::uint8_t>(e - 1);
      r.add_term(n, e * c);
    }
  }
  return r;
}

TrigPoly TrigPoly::on_sphere() const {
  TrigPoly cur = *this;
  const TrigPoly x3_squared = 1 - var(Var::X1) * var(Var::X1) - var(Var::X2) * var(Var::X2);
  while (true) {
    TrigPoly next;
    bool changed = false;
    for (const auto& [m, c] : cur.terms_) {
      if (m.exp[kX3] < 2) {
        next.add_term(m, c);
        continue;
      }
      Monomial lower = m;
      lower.exp[kX3] = static_cast<std::uint8_t>(lower.exp[kX3] - 2);
      next += term(lower, c) * x3_squared;
      changed = true;
    }
    cur = next;
    if (!changed) return cur;
  }
}

TrigPoly TrigPoly::substitute(const std::array<TrigPoly, 3>& x) const {
  TrigPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial trig;
    trig.exp[kC] = m.exp[kC];
    trig.exp[kS] = m.exp[kS];
    TrigPoly t = term(trig, c);
    for (std::size_t v = 0; v < 3; ++v) {
      for (int k = 0; k < m.exp[v]; ++k) t = t * x[v];
    }
    r += t;
  }
  return r;
}

double TrigPoly::eval(double theta, const std::array<double, 3>& x) const {
  const double vals[5] = {x[0], x[1], x[2], std::cos(theta), std::sin(theta)};
  double sum = 0;
  for (const auto& [m, c] : terms_) {
    double t = static_cast<double>(c);
    for (std::size_t k = 0; k < 5; ++k) t *= std::pow(vals[k], m.exp[k]);
    sum += t;
  }
  return sum;
}

std::string TrigPoly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[5] = {"x1", "x2", "x3", "c", "s"};
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < 5; ++k) {
      if (m.exp[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[k];
      if (m.exp[k] > 1) mono += '^' + std::to_string(m.exp[k]);
    }
    const long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + '*';
      out += mono;
    }
  }
  return out;
}

// ---- vector fields and maps ----

Vector PolyVectorField::eval(const Point& p) const {
  Vector v{};
  for (std::size_t k = 0; k < 4; ++k) v[k] = comp[k].eval(p[0], {p[1], p[2], p[3]});
  return v;
}

TrigPoly PolyVectorField::apply(const TrigPoly& f) const {
  TrigPoly r;
  for (int k = 0; k < 4; ++k) r += comp[static_cast<std::size_t>(k)] * f.diff(k);
  return r;
}

PolyMap PolyMap::identity() {
  return {true, {TrigPoly::var(Var::X1), TrigPoly::var(Var::X2), TrigPoly::var(Var::X3)}};
}

PolyMap PolyMap::rotation() {
  const TrigPoly c = TrigPoly::var(Var::C);
  const TrigPoly s = TrigPoly::var(Var::S);
  const TrigPoly x1 = TrigPoly::var(Var::X1);
  const TrigPoly x2 = TrigPoly::var(Var::X2);
  return {true, {c * x1 - s * x2, s * x1 + c * x2, TrigPoly::var(Var::X3)}};
}

// ---- forms ----

namespace {

// Sign of dx_a ^ dx_b relative to the sorted basis element a | b.
int wedge_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned j = 0; j < 4; ++j) {
    if (b & (1u << j)) swaps += std::popcount(a >> (j + 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

std::vector<int> indices(unsigned mask) {
  std::vector<int> out;
  for (int j = 0; j < 4; ++j) {
    if (mask & (1u << j)) out.push_back(j);
  }
  return out;
}

double det(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  double d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (m[piv][col] == 0) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return d;
}

}  // namespace

void PolyForm::add(unsigned mask, const TrigPoly& f) {
  if (f.is_zero()) return;
  TrigPoly& slot = coef_[mask];
  slot += f;
  if (slot.is_zero()) coef_.erase(mask);
}

PolyForm PolyForm::function(const TrigPoly& f) {
  PolyForm w(0);
  w.add(0, f);
  return w;
}

PolyForm PolyForm::basis(int coord) {
  PolyForm w(1);
  w.add(1u << coord, 1);
  return w;
}

PolyForm PolyForm::from_terms(int degree, const std::map<unsigned, TrigPoly>& terms) {
  PolyForm w(degree);
  for (const auto& [mask, f] : terms) w.add(mask, f);
  return w;
}

TrigPoly PolyForm::coefficient(unsigned mask) const {
  auto it = coef_.find(mask);
  return it == coef_.end() ? TrigPoly{} : it->second;
}

PolyForm operator+(const PolyForm& a, const PolyForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree_ != b.degree_) throw std::invalid_argument("adding forms of different degree");
  PolyForm r = a;
  for (const auto& [mask, f] : b.coef_) r.add(mask, f);
  return r;
}

PolyForm operator-(const PolyForm& a, const PolyForm& b) { return a + TrigPoly(-1) * b; }

PolyForm operator*(const TrigPoly& f, const PolyForm& w) {
  PolyForm r(w.degree_);
  for (const auto& [mask, g] : w.coef_) r.add(mask, f * g);
  return r;
}

PolyForm PolyForm::on_sphere() const {
  PolyForm r(degree_);
  for (const auto& [mask, f] : coef_) r.add(mask, f.on_sphere());
  return r;
}

double PolyForm::eval(const Point& p, const std::vector<Vector>& vectors) const {
  if (static_cast<int>(vectors.size()) != degree_) throw std::invalid_argument("wrong number of vectors");
  double sum = 0;
  for (const auto& [mask, f] : coef_) {
    const std::vector<int> idx = indices(mask);
    std::vector<std::vector<double>> m(idx.size(), std::vector<double>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t c = 0; c < idx.size(); ++c) m[r][c] = vectors[c][static_cast<std::size_t>(idx[r])];
    }
    sum += f.eval(p[0], {p[1], p[2], p[3]}) * (idx.empty() ? 1.0 : det(m));
  }
  return sum;
}

std::string PolyForm::str() const {
  if (coef_.empty()) return "0";
  static const char* names[4] = {"dtheta", "dx1", "dx2", "dx3"};
  std::string out;
  for (const auto& [mask, f] : coef_) {
    if (!out.empty()) out += " + ";
    out += "(" + f.str() + ")";
    for (int j : indices(mask)) out += std::string(out.back() == ')' ? " " : "^") + names[j];
  }
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  PolyForm r(a.degree() + b.degree());
  std::map<unsigned, TrigPoly> acc;
  for (const auto& [ma, fa] : a.terms()) {
    for (const auto& [mb, fb] : b.terms()) {
      if (ma & mb) continue;
      acc[ma | mb] += TrigPoly(wedge_sign(ma, mb)) * fa * fb;
    }
  }
  return PolyForm::from_terms(a.degree() + b.degree(), acc);
}

PolyForm exterior_derivative(const PolyForm& w) {
  std::map<unsigned, TrigPoly> acc;
  for (const auto& [mask, f] : w.terms()) {
    for (int j = 0; j < 4; ++j) {
      const unsigned bit = 1u << j;
      if (mask & bit) continue;
      acc[mask | bit] += TrigPoly(wedge_sign(bit, mask)) * f.diff(j);
    }
  }
  return PolyForm::from_terms(w.degree() + 1, acc);
}

PolyForm interior(const PolyVectorField& X, const PolyForm& w) {
  if (w.degree() == 0) return PolyForm(0);
  std::map<unsigned, TrigPoly> acc;
  for (const auto& [mask, f] : w.terms()) {
    const std::vector<int> idx = indices(mask);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const TrigPoly sign(k % 2 == 0 ? 1 : -1);
      acc[mask & ~(1u << idx[k])] += sign * X.comp[static_cast<std::size_t>(idx[k])] * f;
    }
  }
  return PolyForm::from_terms(w.degree() - 1, acc);
}

PolyForm pullback(const PolyForm& w, const PolyMap& f) {
  if (!f.theta_identity) {
    throw Error(ErrorKind::UnsupportedMap, "pullback only supports maps that fix theta");
  }
  std::array<PolyForm, 4> dphi = {PolyForm::basis(0), exterior_derivative(PolyForm::function(f.x[0])),
                                   exterior_derivative(PolyForm::function(f.x[1])),
                                   exterior_derivative(PolyForm::function(f.x[2]))};
  PolyForm r(w.degree());
  for (const auto& [mask, g] : w.terms()) {
    PolyForm t = PolyForm::function(g.substitute(f.x));
    for (int j : indices(mask)) t = wedge(t, dphi[static_cast<std::size_t>(j)]);
    r = r + t;
  }
  return r;
}

PolyForm lie_derivative(const PolyForm& w, const PolyVectorField& X) {
  PolyForm a = interior(X, exterior_derivative(w));
  if (w.degree() == 0) return a;
  return a + exterior_derivative(interior(X, w));
}

PolyForm lie_derivative_direct(const PolyForm& w, const PolyVectorField& X) {
  PolyForm r(w.degree());
  for (const auto& [mask, f] : w.terms()) {
    const std::vector<int> idx = indices(mask);
    PolyForm basis_form = PolyForm::function(1);
    for (int j : idx) basis_form = wedge(basis_form, PolyForm::basis(j));
    r = r + X.apply(f) * basis_form;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      PolyForm t = PolyForm::function(f);
      for (std::size_t q = 0; q < idx.size(); ++q) {
        const PolyForm factor =
            q == k ? exterior_derivative(PolyForm::function(X.comp[static_cast<std::size_t>(idx[q])]))
                   : PolyForm::basis(idx[q]);
        t = wedge(t, factor);
      }
      r = r + t;
    }
  }
  return r;
}

TrigPoly random_trig_poly(std::mt19937_64& rng, int terms, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> trig(0, 2);
  std::uniform_int_distribution<long long> coef(-5, 5);
  TrigPoly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (std::size_t v = 0; v < 3; ++v) m.exp[v] = static_cast<std::uint8_t>(deg(rng));
    m.exp[kC] = static_cast<std::uint8_t>(trig(rng));
    m.exp[kS] = static_cast<std::uint8_t>(trig(rng));
    p += TrigPoly::term(m, coef(rng));
  }
  return p;
}

PolyForm random_form(std::mt19937_64& rng, int degree) {
  std::map<unsigned, TrigPoly> terms;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (std::popcount(mask) == degree) terms[mask] = random_trig_poly(rng);
  }
  return PolyForm::from_terms(degree, terms);
}

// ---- the concrete objects ----

namespace {
TrigPoly x(int i) { return TrigPoly::var(static_cast<Var>(i - 1)); }
}  // namespace

PolyForm contact_form() {
  return PolyForm::from_terms(1, {{1u << 0, x(3)}, {1u << 2, x(1)}, {1u << 1, -x(2)}});
}

PolyVectorField radial_field() {
  return {{TrigPoly{}, x(1) * x(3), x(2) * x(3), x(3) * x(3) - 1}};
}

PolyVectorField global_section() {
  return {{x(2) - x(1), x(3), x(3), -(x(1) + x(2))}};
}

namespace {

Check exact(std::string name, const PolyForm& got, const PolyForm& want) {
  const PolyForm diff = got - want;
  return {std::move(name), diff.is_zero(), diff.is_zero() ? "" : "remainder " + diff.str()};
}

Check exact(std::string name, const TrigPoly& got, const TrigPoly& want) {
  const TrigPoly diff = got - want;
  return {std::move(name), diff.is_zero(), diff.is_zero() ? "" : "remainder " + diff.str()};
}

}  // namespace

std::vector<Check> verify_identities() {
  const PolyForm alpha = contact_form();
  const PolyForm dtheta = PolyForm::basis(0);
  const PolyVectorField X = radial_field();
  std::vector<Check> out;
  out.push_back(exact("d(alpha)", exterior_derivative(alpha),
                      wedge(PolyForm::basis(3), dtheta) +
                          TrigPoly(2) * wedge(PolyForm::basis(1), PolyForm::basis(2))));
  out.push_back(exact("pullback(alpha, id)", pullback(alpha, PolyMap::identity()), alpha));
  out.push_back(exact("pullback(alpha, r)", pullback(alpha, PolyMap::rotation()),
                      PolyForm::from_terms(1, {{1u << 0, x(3) + x(1) * x(1) + x(2) * x(2)},
                                               {1u << 2, x(1)},
                                               {1u << 1, -x(2)}})));
  out.push_back(exact("i_X(alpha)", interior(X, alpha), PolyForm(0)));
  out.push_back(exact("lie_derivative(alpha, X)", lie_derivative(alpha, X),
                      TrigPoly(2) * x(3) * alpha - (1 + x(3) * x(3)) * dtheta));
  out.push_back(exact("lie_derivative Cartan = direct", lie_derivative(alpha, X), lie_derivative_direct(alpha, X)));
  for (Check& c : verify_section()) out.push_back(std::move(c));
  return out;
}

std::vector<Check> verify_section() {
  const PolyVectorField s = global_section();
  const PolyForm alpha = contact_form();
  std::vector<Check> out;
  out.push_back(exact("alpha(s)", interior(s, alpha).coefficient(0), TrigPoly{}));
  out.push_back(exact("s tangent to S2", s.comp[1] * x(1) + s.comp[2] * x(2) + s.comp[3] * x(3), TrigPoly{}));
  TrigPoly norm;
  for (const TrigPoly& c : s.comp) norm += c * c;
  out.push_back(exact("|s|^2 on S2", norm.on_sphere(), TrigPoly(2)));
  return out;
}

PositivityReport verify_contact_positivity(std::size_t samples, std::uint64_t seed, double tolerance) {
  return verify_contact_positivity(contact_form(), samples, seed, tolerance);
}

PositivityReport verify_contact_positivity(const PolyForm& w, std::size_t samples, std::uint64_t seed,
                                           double tolerance) {
  const PolyForm volume = wedge(w, exterior_derivative(w));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::normal_distribution<double> gauss(0.0, 1.0);

  PositivityReport rep;
  rep.pass = true;
  rep.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = angle(rng);
    std::array<double, 3> n{};
    double len = 0;
    while (len < 1e-6) {
      for (double& v : n) v = gauss(rng);
      len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    }
    for (double& v : n) v /= len;
    // e1 orthogonal to n, e2 = n x e1
    std::array<double, 3> a = std::abs(n[0]) < 0.9 ? std::array<double, 3>{1, 0, 0} : std::array<double, 3>{0, 1, 0};
    const double dot = a[0] * n[0] + a[1] * n[1] + a[2] * n[2];
    std::array<double, 3> e1{a[0] - dot * n[0], a[1] - dot * n[1], a[2] - dot * n[2]};
    const double l1 = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
    for (double& v : e1) v /= l1;
    const std::array<double, 3> e2{n[1] * e1[2] - n[2] * e1[1], n[2] * e1[0] - n[0] * e1[2],
                                   n[0] * e1[1] - n[1] * e1[0]};
    const Point p{theta, n[0], n[1], n[2]};
    const double value =
        volume.eval(p, {Vector{1, 0, 0, 0}, Vector{0, e1[0], e1[1], e1[2]}, Vector{0, e2[0], e2[1], e2[2]}});
    if (k == 0 || value < rep.min_value) {
      rep.min_value = value;
      rep.witness = p;
    }
    if (!(value > tolerance)) rep.pass = false;
  }
  return rep;
}

}  // namespace legendra
