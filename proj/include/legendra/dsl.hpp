#pragma once

#include <string>
#include <string_view>

#include "legendra/front.hpp"

namespace legendra {

// Diagram text format:
//
//   handles <h>
//   ports <b1> ... <bh>        (omitted when h = 0)
//   wraps <w1> ... <wn>        (omitted when there are no passages; zeros)
//   word <tok> ...             tokens L<i>, R<i>, X<i>
//   orient <marker>=+|- ...    marker: port<k> or ev<j>.<i>
//
// `#` starts a comment. ev<j>.<i> names position i next to event j: on the
// output side of a left cusp, on the input side of a right cusp or crossing.

// Syntax only; throws Error{SyntaxError} with line and column.
RawDiagram parse_raw(std::string_view text);

// parse_raw followed by validate.
FrontDiagram parse(std::string_view text);

// Emits one marker per component: the first port it passes through, or else
// the first event touching it.
std::string print(const FrontDiagram& d);

}  // namespace legendra
