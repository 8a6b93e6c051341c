#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace legendra {

enum class EventKind : std::uint8_t { LeftCusp = 0, Crossing = 1, RightCusp = 2 };

// One letter of a front word. The event acts on positions pos and pos+1,
// counted from the top. Directions are +1 (rightward) or -1 (leftward) and
// describe the event's own strands: the upper output of a left cusp, the
// upper input of a right cusp, and both inputs of a crossing. For cusps
// dir_lo is always -dir_hi.
struct Event {
  EventKind kind = EventKind::Crossing;
  int pos = 1;
  int dir_hi = 0;
  int dir_lo = 0;

  friend bool operator==(const Event&, const Event&) = default;
  friend auto operator<=>(const Event&, const Event&) = default;
};

using Word = std::vector<Event>;

inline Event left_cusp(int pos) { return {EventKind::LeftCusp, pos, 0, 0}; }
inline Event right_cusp(int pos) { return {EventKind::RightCusp, pos, 0, 0}; }
inline Event crossing(int pos) { return {EventKind::Crossing, pos, 0, 0}; }

// Change in the live strand count caused by an event.
int strand_delta(EventKind kind);

// Number of live strands after each prefix of the word; element t is the
// count before event t (so the result has word.size()+1 entries). No
// validation is performed.
std::vector<int> strand_counts(const Word& word, int start);

// Token form used by the DSL: L<i>, R<i>, X<i>.
std::string token(const Event& e);

// A strand segment: the strand at position `pos` in the state after `state`
// events.
struct Segment {
  std::size_t state = 0;
  int pos = 1;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Passage {
  int port = 1;    // 1-based edge position
  int handle = 1;  // 1-based handle owning the port
  int sign = 1;    // +1 when traversed rightward
};

struct Component {
  std::vector<Segment> segments;  // traversal order along the orientation
  std::vector<Passage> passages;  // traversal order
  std::vector<int> signed_passages;     // per handle
  std::vector<int> geometric_passages;  // per handle
};

struct OrientationMarker {
  bool on_port = false;
  int port = 0;       // port<k>
  int event = 0;      // ev<j>.<i>: 1-based event index
  int position = 0;   // ev<j>.<i>: position i
  int sign = 1;
  int line = 0;
  int column = 0;
};

// Unvalidated diagram data as read from the DSL. Word directions are ignored;
// orientation comes from the markers. Source locations are optional and only
// used to decorate errors.
struct RawDiagram {
  int handles = 0;
  std::vector<int> ports;
  std::vector<int> wraps;
  Word word;
  std::vector<OrientationMarker> markers;

  int ports_line = 0;
  int wraps_line = 0;
  int word_line = 0;
  std::vector<int> word_columns;
};

// A validated, oriented front diagram in standard form with h >= 0
// one-handles. Immutable after construction.
class FrontDiagram {
 public:
  // Builds a diagram whose word already carries direction bits. Throws
  // Error on any invariant violation, including inconsistent directions.
  static FrontDiagram from_oriented(int handles, std::vector<int> ports, std::vector<int> wraps,
                                    Word word, std::vector<int> port_dirs);

  int handles() const { return handles_; }
  const std::vector<int>& ports() const { return ports_; }
  const std::vector<int>& wraps() const { return wraps_; }
  const Word& word() const { return word_; }
  // Direction of the strand at left-edge position k (index k-1).
  const std::vector<int>& port_dirs() const { return port_dirs_; }

  int edge_count() const { return static_cast<int>(port_dirs_.size()); }
  int handle_of_port(int port) const;
  // First port (1-based) of a handle's block.
  int block_start(int handle) const;

  int width(std::size_t state) const { return widths_[state]; }
  const std::vector<int>& widths() const { return widths_; }
  int dir(std::size_t state, int pos) const { return dirs_[node(state, pos)]; }
  int component_of(std::size_t state, int pos) const { return comp_[node(state, pos)]; }
  const std::vector<Component>& components() const { return components_; }
  bool standard_form() const;

  // Replaces events [begin, end) by `replacement` (directions recomputed from
  // the untouched part of the diagram) and installs new wraps. The
  // replacement must preserve the strand counts at both window ends.
  FrontDiagram splice(std::size_t begin, std::size_t end, const Word& replacement,
                      std::vector<int> wraps) const;
  FrontDiagram with_wraps(std::vector<int> wraps) const;
  // Same geometry with every component reversed.
  FrontDiagram reversed() const;

  friend bool operator==(const FrontDiagram& a, const FrontDiagram& b) {
    return a.handles_ == b.handles_ && a.ports_ == b.ports_ && a.wraps_ == b.wraps_ &&
           a.word_ == b.word_ && a.port_dirs_ == b.port_dirs_;
  }

 private:
  friend FrontDiagram validate(const RawDiagram& raw);

  FrontDiagram() = default;
  std::size_t node(std::size_t state, int pos) const { return offsets_[state] + pos - 1; }
  void trace();

  int handles_ = 0;
  std::vector<int> ports_;
  std::vector<int> wraps_;
  Word word_;
  std::vector<int> port_dirs_;

  std::vector<int> widths_;
  std::vector<std::size_t> offsets_;
  std::vector<int> dirs_;
  std::vector<int> comp_;
  std::vector<Component> components_;
};

FrontDiagram validate(const RawDiagram& raw);

std::vector<Component> trace_components(const FrontDiagram& d);

}  // namespace legendra
