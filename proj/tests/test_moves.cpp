#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "legendra/canonical.hpp"
#include "legendra/error.hpp"
#include "legendra/generate.hpp"
#include "legendra/invariants.hpp"
#include "legendra/search.hpp"

using namespace legendra;
using testing::named;

namespace {

int count(const std::vector<MoveInstance>& moves, MoveKind kind) {
  return static_cast<int>(std::count_if(moves.begin(), moves.end(), [&](const auto& m) { return m.kind == kind; }));
}

bool is_pattern(MoveKind k) {
  return k == MoveKind::R1Remove || k == MoveKind::R2Remove || k == MoveKind::R3 || k == MoveKind::DestabPlus ||
         k == MoveKind::DestabMinus || k == MoveKind::CancelStabPair;
}

// Some applicable move of `kind` takes `from` back to `to`.
bool undone_by(const FrontDiagram& from, const FrontDiagram& to, MoveKind kind) {
  for (const MoveInstance& m : applicable_moves(from)) {
    if (m.kind == kind && canonical_equal(apply(from, m), to)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("moves available on the unknot") {
  const auto moves = applicable_moves(named("unknot"));
  CHECK(count(moves, MoveKind::R1Insert) == 2 * 2);  // two segments, loop below or above
  CHECK(count(moves, MoveKind::StabPlus) == 2);
  CHECK(count(moves, MoveKind::StabMinus) == 2);
  CHECK(count(moves, MoveKind::R2Remove) == 0);
  CHECK(count(moves, MoveKind::R3) == 0);
}

TEST_CASE("moves available on K0") {
  const auto moves = applicable_moves(named("K0"));
  CHECK(count(moves, MoveKind::Move6Wrap) > 0);
  CHECK(count(moves, MoveKind::RcPower) == 2);
  CHECK(std::none_of(moves.begin(), moves.end(), [](const auto& m) { return is_pattern(m.kind); }));
}

TEST_CASE("a stabilization pair can be cancelled") {
  const FrontDiagram d = testing::stab(testing::stab(named("K0"), -1, 0, 1), 1, 0, 1);
  const auto moves = applicable_moves(d);
  REQUIRE(count(moves, MoveKind::CancelStabPair) > 0);
  const auto it = std::find_if(moves.begin(), moves.end(), [](const auto& m) { return m.kind == MoveKind::CancelStabPair; });
  CHECK(canonical_equal(apply(d, *it), named("K0")));
}

TEST_CASE("unwrapping r_c(K0) gives the positive stabilization of K0") {
  MoveInstance m;
  m.kind = MoveKind::Move6Unwrap;
  m.handle = 1;
  const FrontDiagram d = apply(rc_power(named("K0"), 1, 1), m);
  CHECK(d.wraps() == std::vector<int>{0});
  CHECK(canonical_equal(d, testing::stab(named("K0"), 1, 0, 1)));
  CHECK(invariants(d).cusps_down == 2);
}

TEST_CASE("stabilizing the unknot gives the sharks") {
  const FrontDiagram plus = testing::stab(named("unknot"), 1, 1, 1);
  CHECK(tb(plus) == -2);
  CHECK(rot(plus) == 1);
  CHECK(equiv_search(plus, named("shark_left"), {4}).found);
  const FrontDiagram minus = testing::stab(named("unknot"), -1, 1, 1);
  CHECK(rot(minus) == -1);
  CHECK(equiv_search(minus, named("shark_right"), {4}).found);
}

TEST_CASE("insertions are undone by the matching removal") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    const FrontDiagram d = random_diagram(rng, 5);
    std::vector<MoveInstance> inserts;
    for (const MoveInstance& m : applicable_moves(d)) {
      if (m.kind == MoveKind::R1Insert || m.kind == MoveKind::R2Insert || m.kind == MoveKind::StabPlus ||
          m.kind == MoveKind::StabMinus) {
        inserts.push_back(m);
      }
    }
    REQUIRE_FALSE(inserts.empty());
    const MoveInstance& m = inserts[std::uniform_int_distribution<std::size_t>(0, inserts.size() - 1)(rng)];
    const MoveKind inverse = m.kind == MoveKind::R1Insert   ? MoveKind::R1Remove
                             : m.kind == MoveKind::R2Insert ? MoveKind::R2Remove
                             : m.kind == MoveKind::StabPlus ? MoveKind::DestabPlus
                                                            : MoveKind::DestabMinus;
    INFO(move_spec(m) << " on\n" << print(d));
    CHECK(undone_by(apply(d, m), d, inverse));
  }
}

TEST_CASE("Move6 wrap undoes unwrap") {
  for (int k = -3; k <= 3; ++k) {
    if (k == 0) continue;
    const FrontDiagram d = rc_power(named("K0"), 1, k);
    MoveInstance u;
    u.kind = MoveKind::Move6Unwrap;
    u.handle = 1;
    const FrontDiagram e = apply(d, u);
    CHECK(e.wraps() == std::vector<int>{k > 0 ? k - 1 : k + 1});
    CHECK(rot(e) == rot(d));
    CHECK(undone_by(e, d, MoveKind::Move6Wrap));
  }
}

TEST_CASE("Move6 wrap without a leading ribbon") {
  MoveInstance w;
  w.kind = MoveKind::Move6Wrap;
  w.handle = 1;
  w.sign = 1;
  const FrontDiagram e = apply(named("K0"), w);
  CHECK(e.wraps() == std::vector<int>{1});
  CHECK(rot(e) == 0);
  CHECK(equiv_search(e, named("K0"), {3}).found);
  w.sign = -1;
  CHECK_THROWS_AS(apply(e, w), Error);
}

TEST_CASE("r_c powers") {
  for (int k = -5; k <= 5; ++k) CHECK(rot(rc_power(named("K0"), 1, k)) == k);
  CHECK(rc_power(named("L", 0), 1, 0) == named("L", 0));
  CHECK_THROWS_AS(rc_power(named("shark_left"), 1, 0), Error);
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      CHECK(rc_power(rc_power(named("K0"), 1, a), 1, b) == rc_power(named("K0"), 1, a + b));
      CHECK(rc_power(rc_power(named("L", 0), 1, a), 1, b) == rc_power(named("L", 0), 1, a + b));
    }
  }
  for (int k = -3; k <= 3; ++k) {
    const FrontDiagram d = rc_power(named("L", 0), 1, k);
    CHECK(rot(d) == 0);
    CHECK(tb(d) == 1);
    CHECK(winding(d) == std::vector<int>{0, 0});
  }
}

TEST_CASE("L(k) is r_c^k applied to L(0)") {
  for (int k : {-1, 1}) {
    const EquivResult r = equiv_search(rc_power(named("L", 0), 1, k), named("L", k), {4});
    CHECK(r.found);
  }
}

TEST_CASE("move specs round trip") {
  std::mt19937_64 rng(9);
  std::vector<FrontDiagram> corpus;
  for (const BuiltinSpec& s : builtin_corpus()) corpus.push_back(builtin(s));
  for (int k = 0; k < 50; ++k) corpus.push_back(random_diagram(rng, 6));
  for (const FrontDiagram& d : corpus) {
    for (const MoveInstance& m : applicable_moves(d)) {
      const std::string spec = move_spec(m);
      INFO(spec);
      CHECK(apply(d, parse_move_spec(spec)) == apply(d, m));
      CHECK(move_spec(parse_move_spec(spec)) == spec);
    }
  }
  CHECK(parse_move_spec("m6-@p1", named("K0")).handle == 1);
  CHECK_THROWS_AS(parse_move_spec("zz@1"), Error);
}

TEST_CASE("moves that do not match throw NotApplicable") {
  try {
    apply(named("unknot"), parse_move_spec("r3@1,2,3"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotApplicable);
  }
  CHECK_THROWS_AS(apply(named("K0"), parse_move_spec("m6-@h1")), Error);
  CHECK_THROWS_AS(apply(named("unknot"), parse_move_spec("s+@0.1")), Error);
}

TEST_CASE("isotopy moves exclude stabilizations and r_c") {
  for (const BuiltinSpec& s : builtin_corpus()) {
    for (const MoveInstance& m : isotopy_moves(builtin(s))) {
      CHECK(is_isotopy(m.kind));
      CHECK(m.kind != MoveKind::RcPower);
      CHECK(m.kind != MoveKind::StabPlus);
      CHECK(m.kind != MoveKind::DestabMinus);
    }
  }
}
