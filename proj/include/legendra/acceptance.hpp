#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace legendra {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// The eight end-to-end acceptance checks, in order. Randomized parts are
// seeded from `seed`, so a run is reproducible.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 42);

}  // namespace legendra
