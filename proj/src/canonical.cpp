#include "legendra/canonical.hpp"

#include "legendra/word.hpp"

namespace legendra {

FrontDiagram canonicalize(const FrontDiagram& d) {
  Word w = canonical_word(d.word(), d.edge_count());
  if (w == d.word()) return d;
  return FrontDiagram::from_oriented(d.handles(), d.ports(), d.wraps(), std::move(w), d.port_dirs());
}

namespace {

class Fnv1a {
 public:
  void add(std::int64_t v) {
    for (int b = 0; b < 8; ++b) {
      state_ ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xffU;
      state_ *= 0x100000001b3ULL;
    }
  }
  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace

std::uint64_t fingerprint_canonical(const FrontDiagram& c) {
  Fnv1a h;
  h.add(c.handles());
  for (int b : c.ports()) h.add(b);
  h.add(-1);
  for (int w : c.wraps()) h.add(w);
  h.add(-2);
  for (int v : c.port_dirs()) h.add(v);
  h.add(-3);
  for (const Event& e : c.word()) {
    h.add(static_cast<int>(e.kind) | (e.pos << 2));
    h.add((e.dir_hi + 1) | ((e.dir_lo + 1) << 2));
  }
  return h.value();
}

}  // namespace legendra
