#include <doctest.h>

#include "helpers.hpp"
#include "legendra/canonical.hpp"
#include "legendra/error.hpp"
#include "legendra/invariants.hpp"
#include "legendra/search.hpp"

using namespace legendra;
using testing::named;

namespace {

ErrorKind normalize_error(const FrontDiagram& d, const SearchLimits& lim = {}) {
  try {
    normalize(d, lim);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("normalize succeeded");
  return ErrorKind::SyntaxError;
}

}  // namespace

TEST_CASE("a diagram is equivalent to itself with no moves") {
  const EquivResult r = equiv_search(named("L", 2), named("L", 2), {0});
  CHECK(r.found);
  CHECK(r.certificate.moves.empty());
}

TEST_CASE("r_c(K0) is isotopic to S+K0") {
  const FrontDiagram a = rc_power(named("K0"), 1, 1);
  const FrontDiagram b = testing::stab(named("K0"), 1, 0, 1);
  const EquivResult r = equiv_search(a, b, {3});
  REQUIRE(r.found);
  CHECK(r.certificate.moves.size() <= 3);
  CHECK(replay(a, r.certificate) == canonicalize(b));
}

TEST_CASE("invariant screen") {
  const EquivResult r = equiv_search(named("unknot"), testing::stab(named("unknot"), 1, 1, 1), {5});
  CHECK_FALSE(r.found);
  CHECK(r.reason == NotFoundReason::InvariantMismatch);
  CHECK(r.nodes == 0);
  CHECK(equiv_search(named("K0"), named("unknot"), {5}).reason == NotFoundReason::InvariantMismatch);
}

TEST_CASE("depth and node limits") {
  const FrontDiagram kinked = apply(named("unknot"), testing::at_segment(MoveKind::R1Insert, 1, 1));
  const EquivResult shallow = equiv_search(named("unknot"), kinked, {0});
  CHECK(shallow.reason == NotFoundReason::DepthExhausted);
  CHECK(equiv_search(named("unknot"), kinked, {1}).found);
  SearchLimits tight{6, 1, 0};
  const EquivResult capped = equiv_search(kinked, named("unknot"), tight);
  CHECK((capped.found || capped.reason == NotFoundReason::NodeLimit));
}

TEST_CASE("normalize K0 and its r_c images") {
  const NormalForm k0 = normalize(named("K0"));
  CHECK(k0.sign == 0);
  CHECK(k0.n == 0);
  CHECK(k0.certificate.moves.empty());
  for (int k = -3; k <= 3; ++k) {
    if (k == 0) continue;
    const FrontDiagram d = rc_power(named("K0"), 1, k);
    const NormalForm nf = normalize(d);
    CHECK(nf.sign == (k > 0 ? 1 : -1));
    CHECK(nf.n == std::abs(k));
    CHECK(replay(d, nf.certificate) == stabilized_core(nf.sign, nf.n));
  }
}

TEST_CASE("stabilized core") {
  CHECK(stabilized_core(0, 0) == canonicalize(named("K0")));
  CHECK(rot(stabilized_core(1, 3)) == 3);
  CHECK(rot(stabilized_core(-1, 2)) == -2);
  CHECK(invariants(stabilized_core(1, 2)).cusp_count == 4);
}

TEST_CASE("normalize undoes scrambling") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const FrontDiagram d = scramble(named("K0"), 10, seed);
    const NormalForm nf = normalize(d);
    CHECK(nf.sign == 0);
    CHECK(nf.n == 0);
    CHECK(replay(d, nf.certificate) == stabilized_core(0, 0));
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const FrontDiagram d = scramble(testing::stab(named("K0"), -1, 0, 1), 6, seed);
    const NormalForm nf = normalize(d);
    CHECK(nf.sign == -1);
    CHECK(nf.n == 1);
    CHECK(replay(d, nf.certificate) == stabilized_core(-1, 1));
  }
}

TEST_CASE("normalize preconditions") {
  CHECK(normalize_error(named("unknot")) == ErrorKind::NotOnceOver);
  CHECK(normalize_error(named("L", 0)) == ErrorKind::NotOnceOver);
  CHECK(normalize_error(parse("handles 1\nports 3\nwraps 0 0 0\nword X1 X2\norient port1=+")) ==
        ErrorKind::NotOnceOver);
  SearchLimits starved{0, 0, 0};
  const FrontDiagram hard = scramble(named("K0"), 10, 3);
  try {
    const NormalForm nf = normalize(hard, starved);
    CHECK(replay(hard, nf.certificate) == stabilized_core(nf.sign, nf.n));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchExhausted);
  }
}

TEST_CASE("scramble is deterministic and keeps invariants") {
  const FrontDiagram a = scramble(named("rcK0", 2), 8, 17);
  CHECK(a == scramble(named("rcK0", 2), 8, 17));
  CHECK(rot(a) == 2);
  CHECK(winding(a) == std::vector<int>{1});
}
