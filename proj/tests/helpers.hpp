#pragma once

#include "legendra/builtins.hpp"
#include "legendra/dsl.hpp"
#include "legendra/moves.hpp"

namespace testing {

inline legendra::FrontDiagram named(const char* name, int k = 0) { return legendra::builtin({name, k}); }

inline legendra::MoveInstance at_segment(legendra::MoveKind kind, std::size_t state, int pos, int variant = 0) {
  legendra::MoveInstance m;
  m.kind = kind;
  m.state = state;
  m.pos = pos;
  m.variant = variant;
  return m;
}

inline legendra::FrontDiagram stab(const legendra::FrontDiagram& d, int sign, std::size_t state, int pos) {
  return legendra::apply(
      d, at_segment(sign > 0 ? legendra::MoveKind::StabPlus : legendra::MoveKind::StabMinus, state, pos));
}

}  // namespace testing
