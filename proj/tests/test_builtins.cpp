#include <doctest.h>

#include "helpers.hpp"
#include "legendra/canonical.hpp"
#include "legendra/error.hpp"
#include "legendra/invariants.hpp"
#include "legendra/search.hpp"

using namespace legendra;
using testing::named;

TEST_CASE("builtin invariant values") {
  for (int k = -3; k <= 3; ++k) {
    const InvariantReport r = invariants(named("L", k));
    CHECK(r.tb == 1);
    CHECK(r.rot == 0);
    CHECK(r.winding == std::vector<int>{0, 0});
  }
  CHECK(rot(named("shark_right")) == -1);
  CHECK(rot(named("shark_left")) == 1);
  CHECK(tb(named("unknot")) == -1);
  CHECK(named("rcK0", 0) == named("K0"));
  CHECK(named("rcK0", 3) == rc_power(named("K0"), 1, 3));
}

TEST_CASE("the sharks are the stabilized unknot") {
  const FrontDiagram u = named("unknot");
  CHECK(equiv_search(testing::stab(u, 1, 1, 1), named("shark_left"), {4}).found);
  CHECK(equiv_search(testing::stab(u, -1, 1, 1), named("shark_right"), {4}).found);
}

TEST_CASE("builtin specs") {
  CHECK(parse_builtin_spec("L(-3)").k == -3);
  CHECK(parse_builtin_spec("L(-3)").name == "L");
  CHECK(parse_builtin_spec("shark_left").name == "shark_left");
  CHECK(to_string(BuiltinSpec{"rcK0", 2}) == "rcK0(2)");
  for (const char* bad : {"trefoil", "K0(1)", "L(x)", "L(2", "L(11)"}) {
    INFO(bad);
    try {
      builtin(parse_builtin_spec(bad));
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownBuiltin);
    }
  }
}

TEST_CASE("every builtin validates and round-trips") {
  for (const BuiltinSpec& s : builtin_corpus()) {
    INFO(to_string(s));
    const FrontDiagram d = builtin(s);
    CHECK(d.components().size() == 1);
    CHECK(canonical_equal(parse(print(d)), d));
  }
  CHECK(builtin_corpus().size() == 4 + 7 + 7);
}
