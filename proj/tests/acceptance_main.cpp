#include <cstdlib>
#include <iostream>

#include "legendra/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 42;
  bool all = true;
  for (const auto& r : legendra::run_acceptance(seed)) {
    all = all && r.pass;
    std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << " (" << r.detail
              << ", " << r.seconds << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
