#include "legendra/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "legendra/builtins.hpp"
#include "legendra/canonical.hpp"
#include "legendra/dsl.hpp"
#include "legendra/error.hpp"
#include "legendra/generate.hpp"
#include "legendra/invariants.hpp"
#include "legendra/moves.hpp"
#include "legendra/search.hpp"
#include "legendra/trigform.hpp"

namespace legendra {

namespace {

// Collects failures; the criterion passes when none were recorded.
struct Tally {
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool ok() const { return failures.empty(); }
  std::string summary() const {
    if (ok()) return std::to_string(checks) + " checks";
    std::string s;
    for (const auto& f : failures) s += (s.empty() ? "" : "; ") + f;
    return s;
  }
};

FrontDiagram K0() { return builtin({"K0", 0}); }

FrontDiagram stab_plus(const FrontDiagram& d) {
  MoveInstance m;
  m.kind = MoveKind::StabPlus;
  m.state = 0;
  m.pos = 1;
  return apply(d, m);
}

CriterionResult timed(int id, std::string title, double limit_seconds, const std::function<Tally()>& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  try {
    t = body();
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0) {
    std::ostringstream lim;
    lim << "runtime " << r.seconds << "s over " << limit_seconds << "s";
    t.expect(r.seconds < limit_seconds, lim.str());
  }
  r.pass = t.ok();
  r.detail = t.summary();
  return r;
}

Tally invariant_anchors() {
  Tally t;
  t.expect(tb(builtin({"unknot", 0})) == -1, "tb(unknot) != -1");
  for (int k = -3; k <= 3; ++k) {
    const FrontDiagram L = builtin({"L", k});
    t.expect(tb(L) == 1, "tb(L(" + std::to_string(k) + ")) != 1");
    t.expect(rot(L) == 0, "rot(L(" + std::to_string(k) + ")) != 0");
  }
  t.expect(rot(builtin({"shark_left", 0})) == 1, "rot(shark_left) != 1");
  t.expect(rot(builtin({"shark_right", 0})) == -1, "rot(shark_right) != -1");
  t.expect(winding(K0()) == std::vector<int>{1}, "winding(K0) != (1)");
  return t;
}

Tally rc_action() {
  Tally t;
  for (int k = -5; k <= 5; ++k) {
    t.expect(rot(rc_power(K0(), 1, k)) == k, "rot(r_c^" + std::to_string(k) + " K0) != k");
  }
  const FrontDiagram L0 = builtin({"L", 0});
  for (int k = -3; k <= 3; ++k) {
    const FrontDiagram d = rc_power(L0, 1, k);
    t.expect(rot(d) == 0, "rot(r_c^" + std::to_string(k) + " L0) != 0");
    t.expect(tb(d) == 1, "tb(r_c^" + std::to_string(k) + " L0) != 1");
  }
  return t;
}

Tally unwrap_certificate() {
  Tally t;
  const FrontDiagram a = rc_power(K0(), 1, 1);
  const FrontDiagram b = stab_plus(K0());
  SearchLimits lim;
  lim.depth = 3;
  const EquivResult r = equiv_search(a, b, lim);
  t.expect(r.found, "no certificate: " + r.detail);
  if (r.found) t.expect(replay(a, r.certificate) == canonicalize(b), "certificate does not replay");
  return t;
}

Tally normalization(std::uint64_t seed) {
  Tally t;
  for (int k = 1; k <= 3; ++k) {
    const FrontDiagram d = rc_power(K0(), 1, k);
    const NormalForm nf = normalize(d);
    t.expect(nf.sign == 1 && nf.n == k, "normalize(r_c^" + std::to_string(k) + " K0) wrong");
    t.expect(replay(d, nf.certificate) == stabilized_core(nf.sign, nf.n), "certificate does not replay");
  }
  for (int s = 0; s < 100; ++s) {
    const FrontDiagram d = scramble(K0(), 10, seed + static_cast<std::uint64_t>(s));
    const std::string tag = "scramble seed " + std::to_string(seed + static_cast<std::uint64_t>(s));
    try {
      const NormalForm nf = normalize(d);
      t.expect(nf.sign == 0 && nf.n == 0, tag + ": not (none, 0)");
      t.expect(replay(d, nf.certificate) == stabilized_core(0, 0), tag + ": certificate does not replay");
    } catch (const Error& e) {
      t.expect(false, tag + ": " + e.what());
    }
  }
  return t;
}

Tally move_invariance(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  int pairs = 0;
  while (pairs < 1000) {
    const FrontDiagram d = random_diagram(rng, 8);
    const std::vector<MoveInstance> moves = isotopy_moves(d);
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    for (int j = 0; j < 5 && pairs < 1000; ++j, ++pairs) {
      const MoveInstance& m = moves[pick(rng)];
      const FrontDiagram e = apply(d, m);
      const InvariantReport a = invariants(d);
      const InvariantReport b = invariants(e);
      const bool same = a.rot == b.rot && a.winding == b.winding && (!a.tb || !b.tb || *a.tb == *b.tb);
      t.expect(same, move_spec(m) + " changed an invariant of\n" + print(d));
    }
  }
  for (int k = 0; k < 500; ++k) {
    const FrontDiagram d = random_null_homologous(rng, 6);
    std::vector<std::size_t> states;
    for (std::size_t s = 0; s < d.widths().size(); ++s) {
      if (d.width(s) > 0) states.push_back(s);
    }
    std::uniform_int_distribution<std::size_t> state(0, states.size() - 1);
    MoveInstance m;
    m.kind = k % 2 == 0 ? MoveKind::StabPlus : MoveKind::StabMinus;
    m.state = states[state(rng)];
    std::uniform_int_distribution<int> pos(1, d.width(m.state));
    m.pos = pos(rng);
    const FrontDiagram e = apply(d, m);
    const int drot = m.kind == MoveKind::StabPlus ? 1 : -1;
    t.expect(tb(d) && tb(e) && *tb(e) == *tb(d) - 1, move_spec(m) + ": tb did not drop by 1");
    t.expect(rot(e) == rot(d) + drot, move_spec(m) + ": rot did not shift by the sign");
  }
  return t;
}

Tally form_identities(std::uint64_t seed) {
  Tally t;
  for (const Check& c : verify_identities()) t.expect(c.pass, c.name + ": " + c.detail);
  std::mt19937_64 rng(seed);
  const PolyMap r = PolyMap::rotation();
  for (int k = 0; k < 100; ++k) {
    const int degree = k % 2;
    const PolyForm w = random_form(rng, degree);
    t.expect(exterior_derivative(exterior_derivative(w)).is_zero(), "d(d(w)) != 0 for " + w.str());
    t.expect(pullback(exterior_derivative(w), r) == exterior_derivative(pullback(w, r)),
             "pullback does not commute with d for " + w.str());
  }
  return t;
}

Tally contact_positivity(std::uint64_t seed) {
  Tally t;
  const PositivityReport rep = verify_contact_positivity(10'000, seed, 1e-9);
  t.expect(rep.pass, "non-positive sample, minimum " + std::to_string(rep.min_value));
  const PositivityReport control = verify_contact_positivity(PolyForm::basis(0), 100, seed, 1e-9);
  t.expect(!control.pass, "dtheta passed the contact test");
  return t;
}

struct BadInput {
  const char* text;
  ErrorKind kind;
  int line;
};

Tally parser(std::uint64_t seed) {
  Tally t;
  auto round_trip = [&](const FrontDiagram& d, const std::string& tag) {
    const std::string text = print(d);
    const FrontDiagram back = parse(text);
    t.expect(back == d, tag + ": parse(print(d)) != d");
    t.expect(print(back) == text, tag + ": print not stable");
    t.expect(canonical_equal(back, d), tag + ": canonical forms differ");
  };
  for (const BuiltinSpec& s : builtin_corpus()) {
    const FrontDiagram d = builtin(s);
    t.expect(canonical_equal(parse(print(d)), parse(builtin_text(s))), to_string(s) + ": text round trip");
    round_trip(d, to_string(s));
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 500; ++k) round_trip(random_diagram(rng, 6), "random diagram " + std::to_string(k));

  const BadInput cases[] = {
      {"handles 0\nword L1 Q2\norient ev1.1=+\n", ErrorKind::SyntaxError, 2},
      {"handles x\n", ErrorKind::SyntaxError, 1},
      {"word L1 R1\n", ErrorKind::SyntaxError, 1},
      {"handles 0\nword L1 R1\nword L1 R1\n", ErrorKind::SyntaxError, 3},
      {"handles 1\nports 2\nword R1\norient port1=+\n", ErrorKind::UnbalancedWord, 3},
      {"handles 0\nword L1 R2\norient ev1.1=+\n", ErrorKind::UnbalancedWord, 2},
      {"handles 1\nports 1\nword\norient port3=+\n", ErrorKind::DanglingPort, 4},
      {"handles 2\nports 1\nword\norient port1=+\n", ErrorKind::DanglingPort, 2},
      {"handles 0\nword L1 R1\norient ev1.1=+ ev1.2=+\n", ErrorKind::OrientationConflict, 3},
      {"handles 0\nword L1 R1\n", ErrorKind::OrientationConflict, 2},
  };
  for (const BadInput& c : cases) {
    try {
      parse(c.text);
      t.expect(false, std::string("accepted bad input: ") + c.text);
    } catch (const Error& e) {
      t.expect(e.kind() == c.kind && e.line() == c.line && e.column() > 0,
               std::string("wrong error for bad input: ") + e.what());
    }
  }
  try {
    invariants(parse("handles 0\nword L1 L3 R1 R1\norient ev1.1=+ ev2.3=+\n"));
    t.expect(false, "two-component diagram accepted by invariants");
  } catch (const Error& e) {
    t.expect(e.kind() == ErrorKind::MultiComponent, std::string("wrong error: ") + e.what());
  }
  try {
    builtin(parse_builtin_spec("trefoil"));
    t.expect(false, "unknown builtin accepted");
  } catch (const Error& e) {
    t.expect(e.kind() == ErrorKind::UnknownBuiltin, std::string("wrong error: ") + e.what());
  }
  return t;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(timed(1, "invariant anchors", 1.0, invariant_anchors));
  out.push_back(timed(2, "r_c action", 0, rc_action));
  out.push_back(timed(3, "r_c(K0) to S+K0 certificate", 5.0, unwrap_certificate));
  out.push_back(timed(4, "normalization", 60.0, [&] { return normalization(seed); }));
  out.push_back(timed(5, "move invariance", 0, [&] { return move_invariance(seed); }));
  out.push_back(timed(6, "exact form identities", 0, [&] { return form_identities(seed); }));
  out.push_back(timed(7, "contact positivity", 0, [&] { return contact_positivity(seed); }));
  out.push_back(timed(8, "parser", 0, [&] { return parser(seed); }));
  return out;
}

}  // namespace legendra
