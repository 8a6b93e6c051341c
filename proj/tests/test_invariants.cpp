#include <doctest.h>

#include "helpers.hpp"
#include "legendra/error.hpp"
#include "legendra/invariants.hpp"

using namespace legendra;
using testing::named;

TEST_CASE("writhe") {
  CHECK(writhe(named("unknot")) == 0);
  // A type-I kink adds one positive crossing and two cusps.
  const FrontDiagram kinked = apply(named("unknot"), testing::at_segment(MoveKind::R1Insert, 1, 1));
  CHECK(writhe(kinked) == 1);
  CHECK(tb(kinked) == -1);
  // tb(L0) = 1 with two cusps.
  const InvariantReport r = invariants(named("L", 0));
  CHECK(r.cusp_count == 2);
  CHECK(r.writhe == 1 + r.cusp_count / 2);
}

TEST_CASE("rotation number") {
  CHECK(rot(named("unknot")) == 0);
  CHECK(rot(named("shark_left")) == 1);
  CHECK(rot(named("shark_right")) == -1);
  CHECK(rot(named("K0")) == 0);
  CHECK(rot(named("rcK0", 1)) == 1);
  CHECK(rot(named("rcK0", -2)) == -2);
  CHECK(rot(named("unknot").reversed()) == 0);
  CHECK(rot(named("shark_left").reversed()) == -1);
}

TEST_CASE("Thurston-Bennequin number") {
  CHECK(tb(named("unknot")) == -1);
  CHECK(tb(named("shark_left")) == -2);
  CHECK(tb(named("shark_right")) == -2);
  for (int k = -3; k <= 3; ++k) CHECK(tb(named("L", k)) == 1);
  CHECK_FALSE(tb(named("K0")).has_value());
}

TEST_CASE("tb is undefined when a handle carries mixed wraps") {
  const FrontDiagram d = named("L", 0).with_wraps({1, 0, 0, 0});
  CHECK_FALSE(tb(d).has_value());
  CHECK(tb(named("L", 0).with_wraps({1, 1, 0, 0})) == 1);
}

TEST_CASE("winding") {
  CHECK(winding(named("K0")) == std::vector<int>{1});
  CHECK(winding(named("rcK0", 3)) == std::vector<int>{1});
  CHECK(winding(parse("handles 2\nports 0 0\nword L1 R1\norient ev1.1=+")) == std::vector<int>{0, 0});
  for (int k = -3; k <= 3; ++k) CHECK(winding(named("L", k)) == std::vector<int>{0, 0});
}

TEST_CASE("down cusps") {
  const InvariantReport r = invariants(named("unknot"));
  CHECK(r.cusps_down == 1);
  CHECK(r.cusps_up == 1);
  const InvariantReport s = invariants(named("shark_left"));
  CHECK(s.cusps_down == 3);
  CHECK(s.cusps_up == 1);
}

TEST_CASE("invariants need a single component") {
  const FrontDiagram two = parse("handles 0\nword L1 L3 R1 R1\norient ev1.1=+ ev2.3=+");
  try {
    invariants(two);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MultiComponent);
  }
  CHECK_THROWS_AS(rot(two), Error);
  CHECK_THROWS_AS(tb(two), Error);
}
