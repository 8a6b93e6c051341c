#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "legendra/front.hpp"

namespace legendra {

// Named diagrams: unknot, K0, shark_left, shark_right, L(k), rcK0(k), with
// k in -10..10 for the parameterized ones.
struct BuiltinSpec {
  std::string name;
  int k = 0;

  friend bool operator==(const BuiltinSpec&, const BuiltinSpec&) = default;
};

inline constexpr int kMaxBuiltinParam = 10;

// Accepts "L(3)", "rcK0(-2)" or a bare name; throws Error{UnknownBuiltin}.
BuiltinSpec parse_builtin_spec(std::string_view text);
std::string to_string(const BuiltinSpec& spec);

bool is_parameterized(std::string_view name);

// Diagram text of the builtin, in the DSL.
std::string builtin_text(const BuiltinSpec& spec);
FrontDiagram builtin(const BuiltinSpec& spec);

// Every unparameterized builtin plus the parameterized ones for k in -3..3.
std::vector<BuiltinSpec> builtin_corpus();

}  // namespace legendra
