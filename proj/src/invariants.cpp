#include "legendra/invariants.hpp"

#include <algorithm>

#include "legendra/error.hpp"

namespace legendra {

namespace {

void require_knot(const FrontDiagram& d) {
  if (d.components().size() != 1) {
    throw Error(ErrorKind::MultiComponent,
                "expected a single component, found " + std::to_string(d.components().size()));
  }
}

bool wraps_uniform_per_handle(const FrontDiagram& d) {
  for (int g = 1; g <= d.handles(); ++g) {
    const int first = d.block_start(g);
    const int count = d.ports()[static_cast<std::size_t>(g - 1)];
    for (int k = first; k < first + count; ++k) {
      if (d.wraps()[static_cast<std::size_t>(k - 1)] != d.wraps()[static_cast<std::size_t>(first - 1)]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool cusp_is_down(const Event& e) {
  return e.kind == EventKind::LeftCusp ? e.dir_hi == -1 : e.dir_hi == 1;
}

int writhe(const FrontDiagram& d) {
  require_knot(d);
  int w = 0;
  for (const Event& e : d.word()) {
    if (e.kind == EventKind::Crossing) w += e.dir_hi == e.dir_lo ? 1 : -1;
  }
  return w;
}

int rot(const FrontDiagram& d) {
  require_knot(d);
  int down = 0, up = 0;
  for (const Event& e : d.word()) {
    if (e.kind == EventKind::Crossing) continue;
    (cusp_is_down(e) ? down : up) += 1;
  }
  int r = (down - up) / 2;
  for (std::size_t k = 0; k < d.wraps().size(); ++k) r += d.port_dirs()[k] * d.wraps()[k];
  return r;
}

std::vector<int> winding(const FrontDiagram& d) {
  require_knot(d);
  return d.components().front().signed_passages;
}

std::optional<int> tb(const FrontDiagram& d) {
  require_knot(d);
  const auto w = winding(d);
  if (std::any_of(w.begin(), w.end(), [](int v) { return v != 0; })) return std::nullopt;
  if (!wraps_uniform_per_handle(d)) return std::nullopt;
  int cusps = 0;
  for (const Event& e : d.word()) cusps += e.kind == EventKind::Crossing ? 0 : 1;
  return writhe(d) - cusps / 2;
}

InvariantReport invariants(const FrontDiagram& d) {
  require_knot(d);
  InvariantReport r;
  for (const Event& e : d.word()) {
    if (e.kind == EventKind::Crossing) {
      ++r.crossing_count;
    } else {
      ++r.cusp_count;
      (cusp_is_down(e) ? r.cusps_down : r.cusps_up) += 1;
    }
  }
  r.writhe = writhe(d);
  r.rot = rot(d);
  r.tb = tb(d);
  r.winding = winding(d);
  return r;
}

}  // namespace legendra
