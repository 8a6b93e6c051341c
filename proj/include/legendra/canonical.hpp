#pragma once

#include <cstdint>

#include "legendra/front.hpp"

namespace legendra {

// Canonical representative under commutation of events at disjoint
// positions. Idempotent.
FrontDiagram canonicalize(const FrontDiagram& d);

// FNV-1a over the full content of an already canonical diagram.
std::uint64_t fingerprint_canonical(const FrontDiagram& canonical);

inline std::uint64_t fingerprint(const FrontDiagram& d) {
  return fingerprint_canonical(canonicalize(d));
}

inline bool canonical_equal(const FrontDiagram& a, const FrontDiagram& b) {
  return canonicalize(a) == canonicalize(b);
}

}  // namespace legendra
