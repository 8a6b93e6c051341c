#include "legendra/front.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

#include "legendra/error.hpp"

namespace legendra {

int strand_delta(EventKind kind) {
  switch (kind) {
    case EventKind::LeftCusp: return 2;
    case EventKind::RightCusp: return -2;
    case EventKind::Crossing: return 0;
  }
  return 0;
}

std::vector<int> strand_counts(const Word& word, int start) {
  std::vector<int> out;
  out.reserve(word.size() + 1);
  out.push_back(start);
  for (const Event& e : word) out.push_back(out.back() + strand_delta(e.kind));
  return out;
}

std::string token(const Event& e) {
  char c = e.kind == EventKind::LeftCusp ? 'L' : e.kind == EventKind::RightCusp ? 'R' : 'X';
  return c + std::to_string(e.pos);
}

namespace {

// Union-find where each element carries a parity relative to its root;
// parity 1 means "opposite direction".
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, int> find(std::size_t x) {
    std::size_t root = x;
    int par = 0;
    while (parent_[root] != root) {
      par ^= parity_[root];
      root = parent_[root];
    }
    // path compression with parity fix-up
    int acc = par;
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      int old = parity_[x];
      parent_[x] = root;
      parity_[x] = acc;
      acc ^= old;
      x = next;
    }
    return {root, par};
  }

  bool unite(std::size_t a, std::size_t b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ rel;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

struct Anchor {
  std::size_t node;
  int dir;
  int line = 0;
  int column = 0;
};

struct Layout {
  std::vector<int> widths;
  std::vector<std::size_t> offsets;
  std::size_t nodes = 0;
};

Layout make_layout(const Word& word, int n) {
  Layout l;
  l.widths = strand_counts(word, n);
  l.offsets.resize(l.widths.size());
  std::size_t acc = 0;
  for (std::size_t t = 0; t < l.widths.size(); ++t) {
    l.offsets[t] = acc;
    acc += static_cast<std::size_t>(std::max(l.widths[t], 0));
  }
  l.nodes = acc;
  return l;
}

void check_word(const Word& word, int n, int word_line, const std::vector<int>& columns) {
  int m = n;
  for (std::size_t t = 0; t < word.size(); ++t) {
    const Event& e = word[t];
    int col = t < columns.size() ? columns[t] : 0;
    int line = col > 0 ? word_line : 0;
    bool ok = e.kind == EventKind::LeftCusp ? (e.pos >= 1 && e.pos <= m + 1)
                                            : (e.pos >= 1 && e.pos + 1 <= m);
    if (!ok) {
      throw Error(ErrorKind::UnbalancedWord,
                  "event " + std::to_string(t + 1) + " (" + token(e) + ") out of range with " +
                      std::to_string(m) + " live strands",
                  line, col);
    }
    m += strand_delta(e.kind);
  }
  if (m != n) {
    throw Error(ErrorKind::UnbalancedWord,
                "word ends with " + std::to_string(m) + " strands, expected " + std::to_string(n),
                word_line, word_line > 0 ? 1 : 0);
  }
}

struct Solved {
  std::vector<int> dirs;
  std::vector<int> comp;
  int components = 0;
};

Solved solve_orientation(const Layout& l, const Word& word, int n,
                         const std::vector<Anchor>& anchors, int word_line = 0) {
  ParityUnionFind uf(l.nodes);
  auto node = [&](std::size_t t, int p) { return l.offsets[t] + static_cast<std::size_t>(p - 1); };
  for (std::size_t t = 0; t < word.size(); ++t) {
    const Event& e = word[t];
    int m = l.widths[t];
    int i = e.pos;
    switch (e.kind) {
      case EventKind::LeftCusp:
        for (int p = 1; p <= m; ++p) uf.unite(node(t, p), node(t + 1, p < i ? p : p + 2), 0);
        uf.unite(node(t + 1, i), node(t + 1, i + 1), 1);
        break;
      case EventKind::RightCusp:
        for (int p = 1; p <= m; ++p) {
          if (p < i) uf.unite(node(t, p), node(t + 1, p), 0);
          if (p > i + 1) uf.unite(node(t, p), node(t + 1, p - 2), 0);
        }
        uf.unite(node(t, i), node(t, i + 1), 1);
        break;
      case EventKind::Crossing:
        for (int p = 1; p <= m; ++p) {
          int q = p == i ? i + 1 : p == i + 1 ? i : p;
          uf.unite(node(t, p), node(t + 1, q), 0);
        }
        break;
    }
  }
  for (int k = 1; k <= n; ++k) uf.unite(node(word.size(), k), node(0, k), 0);

  std::vector<int> root_dir(l.nodes, 0);
  for (const Anchor& a : anchors) {
    if (a.dir != 1 && a.dir != -1) {
      throw Error(ErrorKind::OrientationConflict, "direction must be + or -", a.line, a.column);
    }
    auto [r, par] = uf.find(a.node);
    int d = par ? -a.dir : a.dir;
    if (root_dir[r] != 0 && root_dir[r] != d) {
      throw Error(ErrorKind::OrientationConflict, "orientation markers disagree on a component",
                  a.line, a.column);
    }
    root_dir[r] = d;
  }

  Solved s;
  s.dirs.resize(l.nodes);
  s.comp.assign(l.nodes, -1);
  std::vector<int> root_comp(l.nodes, -1);
  for (std::size_t x = 0; x < l.nodes; ++x) {
    auto [r, par] = uf.find(x);
    if (root_dir[r] == 0) {
      throw Error(ErrorKind::OrientationConflict, "component has no orientation marker", word_line,
                  word_line > 0 ? 1 : 0);
    }
    s.dirs[x] = par ? -root_dir[r] : root_dir[r];
    if (root_comp[r] < 0) root_comp[r] = s.components++;
    s.comp[x] = root_comp[r];
  }
  return s;
}

void check_ports(int handles, const std::vector<int>& ports, std::size_t wraps, int ports_line,
                 int wraps_line) {
  if (handles < 0) throw Error(ErrorKind::DanglingPort, "negative handle count", ports_line, 1);
  if (static_cast<int>(ports.size()) != handles) {
    throw Error(ErrorKind::DanglingPort,
                std::to_string(ports.size()) + " port counts given for " +
                    std::to_string(handles) + " handles",
                ports_line, ports_line > 0 ? 1 : 0);
  }
  int n = 0;
  for (int b : ports) {
    if (b < 0) {
      throw Error(ErrorKind::DanglingPort, "port counts must be nonnegative", ports_line,
                  ports_line > 0 ? 1 : 0);
    }
    n += b;
  }
  if (wraps != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::DanglingPort,
                std::to_string(wraps) + " wraps given for " + std::to_string(n) + " passages",
                wraps_line, wraps_line > 0 ? 1 : 0);
  }
}

Word annotate(const Word& word, const Layout& l, const std::vector<int>& dirs) {
  Word out = word;
  for (std::size_t t = 0; t < out.size(); ++t) {
    Event& e = out[t];
    auto at = [&](std::size_t s, int p) { return dirs[l.offsets[s] + static_cast<std::size_t>(p - 1)]; };
    switch (e.kind) {
      case EventKind::LeftCusp:
        e.dir_hi = at(t + 1, e.pos);
        e.dir_lo = -e.dir_hi;
        break;
      case EventKind::RightCusp:
        e.dir_hi = at(t, e.pos);
        e.dir_lo = -e.dir_hi;
        break;
      case EventKind::Crossing:
        e.dir_hi = at(t, e.pos);
        e.dir_lo = at(t, e.pos + 1);
        break;
    }
  }
  return out;
}

std::vector<Anchor> anchors_from_bits(const Word& word, const Layout& l,
                                      const std::vector<int>& port_dirs) {
  std::vector<Anchor> out;
  auto node = [&](std::size_t t, int p) { return l.offsets[t] + static_cast<std::size_t>(p - 1); };
  for (std::size_t t = 0; t < word.size(); ++t) {
    const Event& e = word[t];
    switch (e.kind) {
      case EventKind::LeftCusp:
        out.push_back({node(t + 1, e.pos), e.dir_hi});
        out.push_back({node(t + 1, e.pos + 1), e.dir_lo});
        break;
      case EventKind::RightCusp:
        out.push_back({node(t, e.pos), e.dir_hi});
        out.push_back({node(t, e.pos + 1), e.dir_lo});
        break;
      case EventKind::Crossing:
        out.push_back({node(t, e.pos), e.dir_hi});
        out.push_back({node(t, e.pos + 1), e.dir_lo});
        break;
    }
  }
  for (std::size_t k = 0; k < port_dirs.size(); ++k) {
    out.push_back({node(0, static_cast<int>(k) + 1), port_dirs[k]});
  }
  return out;
}

}  // namespace

int FrontDiagram::handle_of_port(int port) const {
  int acc = 0;
  for (int g = 0; g < handles_; ++g) {
    acc += ports_[g];
    if (port <= acc) return g + 1;
  }
  return 0;
}

int FrontDiagram::block_start(int handle) const {
  int acc = 1;
  for (int g = 1; g < handle; ++g) acc += ports_[g - 1];
  return acc;
}

bool FrontDiagram::standard_form() const {
  return std::all_of(wraps_.begin(), wraps_.end(), [](int w) { return w == 0; });
}

FrontDiagram FrontDiagram::from_oriented(int handles, std::vector<int> ports,
                                         std::vector<int> wraps, Word word,
                                         std::vector<int> port_dirs) {
  check_ports(handles, ports, wraps.size(), 0, 0);
  int n = std::accumulate(ports.begin(), ports.end(), 0);
  if (static_cast<int>(port_dirs.size()) != n) {
    throw Error(ErrorKind::DanglingPort, "port direction count does not match port total");
  }
  check_word(word, n, 0, {});
  Layout l = make_layout(word, n);
  Solved s = solve_orientation(l, word, n, anchors_from_bits(word, l, port_dirs));

  FrontDiagram d;
  d.handles_ = handles;
  d.ports_ = std::move(ports);
  d.wraps_ = std::move(wraps);
  d.word_ = std::move(word);
  d.port_dirs_ = std::move(port_dirs);
  d.widths_ = std::move(l.widths);
  d.offsets_ = std::move(l.offsets);
  d.dirs_ = std::move(s.dirs);
  d.comp_ = std::move(s.comp);
  d.components_.resize(static_cast<std::size_t>(s.components));
  d.trace();
  return d;
}

FrontDiagram validate(const RawDiagram& raw) {
  std::vector<int> wraps = raw.wraps;
  int n = 0;
  for (int b : raw.ports) n += b;
  if (wraps.empty() && n > 0 && raw.wraps_line == 0) wraps.assign(static_cast<std::size_t>(n), 0);
  check_ports(raw.handles, raw.ports, wraps.size(), raw.ports_line, raw.wraps_line);
  check_word(raw.word, n, raw.word_line, raw.word_columns);

  Word word = raw.word;
  for (Event& e : word) e.dir_hi = e.dir_lo = 0;
  Layout l = make_layout(word, n);

  std::vector<Anchor> anchors;
  for (const OrientationMarker& m : raw.markers) {
    if (m.on_port) {
      if (m.port < 1 || m.port > n) {
        throw Error(ErrorKind::DanglingPort, "marker port" + std::to_string(m.port) + " does not exist",
                    m.line, m.column);
      }
      anchors.push_back({l.offsets[0] + static_cast<std::size_t>(m.port - 1), m.sign, m.line, m.column});
      continue;
    }
    if (m.event < 1 || m.event > static_cast<int>(word.size())) {
      throw Error(ErrorKind::SyntaxError, "marker refers to missing event " + std::to_string(m.event),
                  m.line, m.column);
    }
    std::size_t j = static_cast<std::size_t>(m.event);
    // Left cusps are addressed on their output side, other events on their input side.
    std::size_t state = word[j - 1].kind == EventKind::LeftCusp ? j : j - 1;
    if (m.position < 1 || m.position > l.widths[state]) {
      throw Error(ErrorKind::SyntaxError,
                  "marker position " + std::to_string(m.position) + " out of range at event " +
                      std::to_string(m.event),
                  m.line, m.column);
    }
    anchors.push_back({l.offsets[state] + static_cast<std::size_t>(m.position - 1), m.sign, m.line,
                       m.column});
  }
  Solved s = solve_orientation(l, word, n, anchors, raw.word_line);

  FrontDiagram d;
  d.handles_ = raw.handles;
  d.ports_ = raw.ports;
  d.wraps_ = std::move(wraps);
  d.word_ = annotate(word, l, s.dirs);
  d.port_dirs_.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) d.port_dirs_[k - 1] = s.dirs[l.offsets[0] + static_cast<std::size_t>(k - 1)];
  d.widths_ = std::move(l.widths);
  d.offsets_ = std::move(l.offsets);
  d.dirs_ = std::move(s.dirs);
  d.comp_ = std::move(s.comp);
  d.components_.resize(static_cast<std::size_t>(s.components));
  d.trace();
  return d;
}

void FrontDiagram::trace() {
  const std::size_t last = word_.size();
  const int n = edge_count();
  for (std::size_t c = 0; c < components_.size(); ++c) {
    Component& comp = components_[c];
    comp.signed_passages.assign(static_cast<std::size_t>(handles_), 0);
    comp.geometric_passages.assign(static_cast<std::size_t>(handles_), 0);

    // start at the first node of the component in storage order
    std::size_t t = 0;
    int p = 0;
    for (std::size_t s = 0; s < widths_.size() && p == 0; ++s) {
      for (int q = 1; q <= widths_[s]; ++q) {
        if (comp_[node(s, q)] == static_cast<int>(c)) {
          t = s;
          p = q;
          break;
        }
      }
    }
    const std::size_t start_t = t;
    const int start_p = p;
    int dr = dir(t, p);
    std::size_t guard = 0;
    do {
      comp.segments.push_back({t, p});
      // move to the next node along the orientation
      if (dr == 1) {
        if (t == last) {
          int g = handle_of_port(p);
          comp.passages.push_back({p, g, 1});
          t = 0;
        } else {
          const Event& e = word_[t];
          int i = e.pos;
          if (e.kind == EventKind::LeftCusp) {
            p = p < i ? p : p + 2;
            ++t;
          } else if (e.kind == EventKind::Crossing) {
            p = p == i ? i + 1 : p == i + 1 ? i : p;
            ++t;
          } else if (p == i || p == i + 1) {
            p = p == i ? i + 1 : i;
            dr = -1;
          } else {
            p = p < i ? p : p - 2;
            ++t;
          }
        }
      } else {
        if (t == 0) {
          int g = handle_of_port(p);
          comp.passages.push_back({p, g, -1});
          t = last;
        } else {
          const Event& e = word_[t - 1];
          int i = e.pos;
          if (e.kind == EventKind::LeftCusp) {
            if (p == i || p == i + 1) {
              p = p == i ? i + 1 : i;
              dr = 1;
            } else {
              p = p < i ? p : p - 2;
              --t;
            }
          } else if (e.kind == EventKind::Crossing) {
            p = p == i ? i + 1 : p == i + 1 ? i : p;
            --t;
          } else {
            p = p < i ? p : p + 2;
            --t;
          }
        }
      }
      ++guard;
    } while (!(t == start_t && p == start_p) && guard <= dirs_.size() + 1);
    for (const Passage& ps : comp.passages) {
      comp.signed_passages[static_cast<std::size_t>(ps.handle - 1)] += ps.sign;
      comp.geometric_passages[static_cast<std::size_t>(ps.handle - 1)] += 1;
    }
  }
  (void)n;
}

FrontDiagram FrontDiagram::splice(std::size_t begin, std::size_t end, const Word& replacement,
                                  std::vector<int> wraps) const {
  Word word;
  word.reserve(word_.size() - (end - begin) + replacement.size());
  word.insert(word.end(), word_.begin(), word_.begin() + static_cast<std::ptrdiff_t>(begin));
  for (Event e : replacement) {
    e.dir_hi = e.dir_lo = 0;
    word.push_back(e);
  }
  word.insert(word.end(), word_.begin() + static_cast<std::ptrdiff_t>(end), word_.end());

  const int n = edge_count();
  check_word(word, n, 0, {});
  Layout l = make_layout(word, n);
  const std::size_t shift_from = begin + replacement.size();
  if (l.widths[begin] != widths_[begin] || l.widths[shift_from] != widths_[end]) {
    throw Error(ErrorKind::UnbalancedWord, "replacement changes the strand count at its boundary");
  }
  // Every node outside the window keeps its old direction.
  std::vector<Anchor> anchors;
  for (std::size_t t = 0; t <= begin; ++t) {
    for (int p = 1; p <= widths_[t]; ++p) anchors.push_back({l.offsets[t] + static_cast<std::size_t>(p - 1), dir(t, p)});
  }
  for (std::size_t t = end; t < widths_.size(); ++t) {
    std::size_t nt = t - end + shift_from;
    for (int p = 1; p <= widths_[t]; ++p) anchors.push_back({l.offsets[nt] + static_cast<std::size_t>(p - 1), dir(t, p)});
  }
  Solved s = solve_orientation(l, word, n, anchors);

  FrontDiagram d;
  d.handles_ = handles_;
  d.ports_ = ports_;
  d.wraps_ = std::move(wraps);
  d.word_ = annotate(word, l, s.dirs);
  d.port_dirs_ = port_dirs_;
  d.widths_ = std::move(l.widths);
  d.offsets_ = std::move(l.offsets);
  d.dirs_ = std::move(s.dirs);
  d.comp_ = std::move(s.comp);
  d.components_.resize(static_cast<std::size_t>(s.components));
  d.trace();
  return d;
}

FrontDiagram FrontDiagram::with_wraps(std::vector<int> wraps) const {
  if (wraps.size() != wraps_.size()) {
    throw Error(ErrorKind::DanglingPort, "wrap count does not match passage count");
  }
  FrontDiagram d = *this;
  d.wraps_ = std::move(wraps);
  return d;
}

FrontDiagram FrontDiagram::reversed() const {
  Word word = word_;
  for (Event& e : word) {
    e.dir_hi = -e.dir_hi;
    e.dir_lo = -e.dir_lo;
  }
  std::vector<int> pd = port_dirs_;
  for (int& v : pd) v = -v;
  return from_oriented(handles_, ports_, wraps_, std::move(word), std::move(pd));
}

std::vector<Component> trace_components(const FrontDiagram& d) { return d.components(); }

}  // namespace legendra
