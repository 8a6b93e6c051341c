#pragma once

#include <random>

#include "legendra/front.hpp"

namespace legendra {

// A random single-component diagram: a builtin knot followed by a walk of
// `steps` applicable moves (stabilizations and r_c included). Words are
// kept to at most `max_events` events by skipping moves that would grow
// them further.
FrontDiagram random_diagram(std::mt19937_64& rng, int steps, std::size_t max_events = 40);

// Same, restricted to knots whose tb is defined (null-homologous builtins,
// no r_c).
FrontDiagram random_null_homologous(std::mt19937_64& rng, int steps, std::size_t max_events = 40);

}  // namespace legendra
