#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "legendra/front.hpp"

namespace legendra {

enum class MoveKind {
  R1Insert,
  R1Remove,
  R2Insert,
  R2Remove,
  R3,
  StabPlus,
  StabMinus,
  DestabPlus,
  DestabMinus,
  Move6Unwrap,
  Move6Wrap,
  CancelStabPair,
  RcPower,
};

std::string_view to_string(MoveKind kind);

// Legendrian isotopy moves: everything except (de)stabilizations and r_c.
bool is_isotopy(MoveKind kind);

// A move kind together with its location. Which fields are meaningful
// depends on the kind:
//   insertions (R1Insert, StabPlus, StabMinus): the strand segment
//     (state, pos); R1Insert also uses variant 0 = loop below, 1 = above.
//   R2Insert: events = {cusp index}; variant 0 = neighbor above, 1 = below.
//   pattern moves (R1Remove, R2Remove, R3, Destab*, CancelStabPair): events
//     lists the word indices of the pattern in pattern order.
//   Move6Unwrap / Move6Wrap: handle, and sign (+1 or -1) of the ribbon.
//     Unwrap moves one wrap unit of sign s into a ribbon of sign s at the left
//     edge. Wrap adds s to the wraps: it removes a leading ribbon of sign s
//     when there is one, otherwise it prepends a ribbon of sign -s.
//   RcPower: handle and power.
struct MoveInstance {
  MoveKind kind = MoveKind::R3;
  std::size_t state = 0;
  int pos = 0;
  int variant = 0;
  std::vector<std::size_t> events;
  int handle = 0;
  int sign = 0;
  int power = 0;

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

// Move-spec text, used by the CLI and in certificates:
//   r1+@<t>.<p>a|b   r1-@<j>,<j>,<j>   r2+@<j>u|d   r2-@<j>,<j>,<j>
//   r3@<j>,<j>,<j>   s+@<t>.<p>   s-@<t>.<p>   d+@<j>,<j>   d-@<j>,<j>
//   m6-@h<g>   m6+@h<g>+|-   cs@<j>,<j>,<j>,<j>   rc^<k>@h<g>
// Event indices j are 1-based; m6-@p<k> is accepted as m6-@h<handle of k>
// once a diagram is known (see parse_move_spec overload).
std::string move_spec(const MoveInstance& m);
MoveInstance parse_move_spec(std::string_view spec);
MoveInstance parse_move_spec(std::string_view spec, const FrontDiagram& d);

// Every applicable instance, RcPower(+1) and RcPower(-1) per handle included,
// in a fixed order.
std::vector<MoveInstance> applicable_moves(const FrontDiagram& d);

// Only the Legendrian isotopy moves.
std::vector<MoveInstance> isotopy_moves(const FrontDiagram& d);

// Throws Error{NotApplicable} when the instance does not match the diagram.
FrontDiagram apply(const FrontDiagram& d, const MoveInstance& m);

FrontDiagram rc_power(const FrontDiagram& d, int handle, int power);

// The word of a zigzag ribbon run by every strand of a handle block, placed
// at the left edge: sign +1 descends (a down-down zigzag on a rightward
// strand), sign -1 ascends. `edges` is the total number of edge strands.
Word ribbon_word(int block_first, int block_size, int edges, int sign);

// A replayable sequence of moves. Replay starts from the canonical form of
// the start diagram and canonicalizes after every move; move locations refer
// to those canonical words.
struct Certificate {
  std::vector<MoveInstance> moves;
};

FrontDiagram replay(const FrontDiagram& start, const Certificate& cert);

}  // namespace legendra
