#pragma once

#include <optional>
#include <vector>

#include "legendra/front.hpp"

namespace legendra {

struct InvariantReport {
  int writhe = 0;
  int cusps_up = 0;
  int cusps_down = 0;
  std::optional<int> tb;  // nullopt: undefined for this diagram
  int rot = 0;
  std::vector<int> winding;
  int crossing_count = 0;
  int cusp_count = 0;
};

// All of these require an oriented single-component diagram and throw
// Error{MultiComponent} otherwise.

// Sum of crossing signs; a crossing is positive exactly when both strands
// run in the same horizontal direction.
int writhe(const FrontDiagram& d);

// Half the difference of down and up cusps, plus one unit per wrap signed
// by the direction the passage is traversed.
int rot(const FrontDiagram& d);

// writhe - cusps/2. Defined when the knot is null-homologous and every
// handle carries a single common wrap value on all its passages.
std::optional<int> tb(const FrontDiagram& d);

// Net signed passage count per handle.
std::vector<int> winding(const FrontDiagram& d);

InvariantReport invariants(const FrontDiagram& d);

// True for a cusp that is traversed from its upper branch to its lower one.
bool cusp_is_down(const Event& e);

}  // namespace legendra
