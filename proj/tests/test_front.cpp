#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "legendra/canonical.hpp"
#include "legendra/error.hpp"
#include "legendra/generate.hpp"
#include "legendra/invariants.hpp"

using namespace legendra;
using testing::named;

namespace {

ErrorKind parse_error(const char* text, int* line = nullptr) {
  try {
    parse(text);
  } catch (const Error& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  FAIL("parse accepted " << text);
  return ErrorKind::SyntaxError;
}

}  // namespace

TEST_CASE("K0 validates with one component passing once over the handle") {
  const FrontDiagram k0 = named("K0");
  CHECK(k0.handles() == 1);
  CHECK(k0.word().empty());
  REQUIRE(k0.components().size() == 1);
  CHECK(k0.components()[0].signed_passages == std::vector<int>{1});
  CHECK(k0.components()[0].geometric_passages == std::vector<int>{1});
}

TEST_CASE("minimal closed front is the unknot") {
  const FrontDiagram u = parse("handles 0\nword L1 R1\norient ev1.1=+");
  REQUIRE(u.components().size() == 1);
  CHECK(u.components()[0].passages.empty());
  CHECK(u == named("unknot"));
}

TEST_CASE("validate rejects an unbalanced word") {
  RawDiagram raw;
  raw.word = {left_cusp(1)};
  raw.markers.push_back(OrientationMarker{false, 0, 1, 1, 1, 0, 0});
  try {
    validate(raw);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnbalancedWord);
  }
}

TEST_CASE("stacked unknots are two components") {
  const FrontDiagram d = parse("handles 0\nword L1 L3 R1 R1\norient ev1.1=+ ev2.3=+");
  CHECK(d.components().size() == 2);
  CHECK(trace_components(d).size() == 2);
}

TEST_CASE("every segment belongs to exactly one component") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const FrontDiagram d = random_diagram(rng, 6);
    std::size_t segments = 0;
    for (int w : d.widths()) segments += static_cast<std::size_t>(w);
    std::size_t traced = 0;
    for (const Component& c : d.components()) traced += c.segments.size();
    CHECK(traced == segments);
  }
}

TEST_CASE("disjoint crossings commute, overlapping ones do not") {
  const char* head = "handles 1\nports 5\nwraps 0 0 0 0 0\n";
  const FrontDiagram a = parse(std::string(head) + "word X1 X4\norient port1=+ port3=+ port4=+");
  const FrontDiagram b = parse(std::string(head) + "word X4 X1\norient port1=+ port3=+ port4=+");
  CHECK(canonical_equal(a, b));
  CHECK(fingerprint(a) == fingerprint(b));

  const FrontDiagram c = parse("handles 1\nports 3\nwraps 0 0 0\nword X1 X2\norient port1=+");
  CHECK(canonicalize(c).word() == c.word());
  const FrontDiagram c2 = parse("handles 1\nports 3\nwraps 0 0 0\nword X2 X1\norient port1=+");
  CHECK_FALSE(canonical_equal(c, c2));
}

TEST_CASE("canonicalize is idempotent and keeps invariants") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const FrontDiagram d = random_diagram(rng, 6);
    const FrontDiagram c = canonicalize(d);
    CHECK(canonicalize(c) == c);
    const InvariantReport a = invariants(d);
    const InvariantReport b = invariants(c);
    CHECK(a.rot == b.rot);
    CHECK(a.tb == b.tb);
    CHECK(a.winding == b.winding);
    CHECK(a.writhe == b.writhe);
  }
}

TEST_CASE("print then parse is stable") {
  for (const BuiltinSpec& s : builtin_corpus()) {
    const FrontDiagram d = builtin(s);
    const std::string text = print(d);
    CHECK(parse(text) == d);
    CHECK(print(parse(text)) == text);
    CHECK(canonical_equal(parse(text), parse(builtin_text(s))));
  }
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const FrontDiagram d = random_diagram(rng, 8);
    CHECK(parse(print(d)) == d);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  const FrontDiagram d = parse("# a comment\n\nhandles 0   # trailing\nword L1 R1\norient ev1.1=-\n");
  CHECK(d.components().size() == 1);
  CHECK(canonical_equal(d.reversed(), named("unknot")));
}

TEST_CASE("parse errors carry kind and line") {
  int line = 0;
  CHECK(parse_error("handles 1\nports 2\nword R1\norient port1=+", &line) == ErrorKind::UnbalancedWord);
  CHECK(line == 3);
  CHECK(parse_error("handles 0\nword L1 Q2\n", &line) == ErrorKind::SyntaxError);
  CHECK(line == 2);
  CHECK(parse_error("handles 1\nports 1\nword\norient port3=+", &line) == ErrorKind::DanglingPort);
  CHECK(line == 4);
  CHECK(parse_error("handles 0\nword L1 R1\norient ev1.1=+ ev1.2=+", &line) == ErrorKind::OrientationConflict);
  CHECK(line == 3);
  CHECK(parse_error("handles 0\nword L1 R1\n", &line) == ErrorKind::OrientationConflict);
  CHECK(parse_error("handles 0\nword L1 R1\norient ev7.1=+", &line) == ErrorKind::SyntaxError);
  CHECK(parse_error("handles 0\nword X1\norient ev1.1=+") == ErrorKind::UnbalancedWord);
}

TEST_CASE("from_oriented rejects inconsistent directions") {
  Word w = {left_cusp(1), right_cusp(1)};
  w[0].dir_hi = 1;
  w[0].dir_lo = -1;
  w[1].dir_hi = -1;
  w[1].dir_lo = 1;
  CHECK_THROWS_AS(FrontDiagram::from_oriented(0, {}, {}, w, {}), Error);
}
