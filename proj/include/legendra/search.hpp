#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "legendra/front.hpp"
#include "legendra/moves.hpp"

namespace legendra {

struct SearchLimits {
  int depth = 12;
  std::size_t max_nodes = 2'000'000;  // expanded diagrams, summed over all rounds
  std::size_t fallback_nodes = 50'000;  // normalize's best-first fallback
};

enum class NotFoundReason { None, InvariantMismatch, DepthExhausted, NodeLimit };

std::string_view to_string(NotFoundReason reason);

// NotFound is a value: `found` false with a reason. A found certificate has
// been replayed from `a` and checked to land on the canonical form of `b`.
struct EquivResult {
  bool found = false;
  Certificate certificate;
  NotFoundReason reason = NotFoundReason::None;
  std::string detail;
  std::size_t nodes = 0;
};

// Iterative deepening over isotopy moves with a canonical-fingerprint
// visited set, after screening by rot, winding and tb.
EquivResult equiv_search(const FrontDiagram& a, const FrontDiagram& b, const SearchLimits& limits = {});

// S_sign^n K0 (sign irrelevant for n = 0), built by stabilizing the first
// segment of K0 n times.
FrontDiagram stabilized_core(int sign, int n);

struct NormalForm {
  int sign = 0;  // +1, -1, or 0 for none
  int n = 0;
  Certificate certificate;  // from the input to stabilized_core(sign, n)
};

// Reduces a knot in S1xS2 passing once over the handle to S_sign^n K0:
// greedy R1/R2 removal (rightmost first), Move6Unwrap, CancelStabPair and
// removal-enabling R3 moves, then a best-first search by diagram size when
// that stalls.
// Throws Error{NotOnceOver} when the precondition fails and
// Error{SearchExhausted} when the fallback search gives up.
NormalForm normalize(const FrontDiagram& d, const SearchLimits& limits = {});

// `moves` random isotopy moves applied from d, canonicalizing as replay does.
FrontDiagram scramble(const FrontDiagram& d, int moves, std::uint64_t seed);

}  // namespace legendra
