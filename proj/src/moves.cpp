#include "legendra/moves.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <tuple>
#include <utility>

#include "legendra/canonical.hpp"
#include "legendra/error.hpp"
#include "legendra/invariants.hpp"
#include "legendra/word.hpp"

namespace legendra {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Insert: return "R1_insert";
    case MoveKind::R1Remove: return "R1_remove";
    case MoveKind::R2Insert: return "R2_insert";
    case MoveKind::R2Remove: return "R2_remove";
    case MoveKind::R3: return "R3";
    case MoveKind::StabPlus: return "StabPlus";
    case MoveKind::StabMinus: return "StabMinus";
    case MoveKind::DestabPlus: return "DestabPlus";
    case MoveKind::DestabMinus: return "DestabMinus";
    case MoveKind::Move6Unwrap: return "Move6Unwrap";
    case MoveKind::Move6Wrap: return "Move6Wrap";
    case MoveKind::CancelStabPair: return "CancelStabPair";
    case MoveKind::RcPower: return "RcPower";
  }
  return "?";
}

bool is_isotopy(MoveKind kind) {
  switch (kind) {
    case MoveKind::StabPlus:
    case MoveKind::StabMinus:
    case MoveKind::DestabPlus:
    case MoveKind::DestabMinus:
    case MoveKind::RcPower:
      return false;
    default:
      return true;
  }
}

namespace {

using E = EventKind;

struct Letter {
  EventKind kind;
  int offset;
};

// Local rewrite patterns; positions are offsets from a common base.
struct Pattern {
  MoveKind kind;
  std::vector<Letter> lhs;
  std::vector<Letter> rhs;
};

const std::vector<Pattern>& patterns() {
  static const std::vector<Pattern> table = {
      // R1: fishtail loop below / above the strand
      {MoveKind::R1Remove, {{E::LeftCusp, 1}, {E::Crossing, 0}, {E::RightCusp, 1}}, {}},
      {MoveKind::R1Remove, {{E::LeftCusp, 0}, {E::Crossing, 1}, {E::RightCusp, 0}}, {}},
      // R2: a strand passing through both branches of a cusp
      {MoveKind::R2Remove, {{E::LeftCusp, 0}, {E::Crossing, 1}, {E::Crossing, 0}}, {{E::LeftCusp, 1}}},
      {MoveKind::R2Remove, {{E::LeftCusp, 1}, {E::Crossing, 0}, {E::Crossing, 1}}, {{E::LeftCusp, 0}}},
      {MoveKind::R2Remove, {{E::Crossing, 0}, {E::Crossing, 1}, {E::RightCusp, 0}}, {{E::RightCusp, 1}}},
      {MoveKind::R2Remove, {{E::Crossing, 1}, {E::Crossing, 0}, {E::RightCusp, 1}}, {{E::RightCusp, 0}}},
      // R3
      {MoveKind::R3,
       {{E::Crossing, 0}, {E::Crossing, 1}, {E::Crossing, 0}},
       {{E::Crossing, 1}, {E::Crossing, 0}, {E::Crossing, 1}}},
      {MoveKind::R3,
       {{E::Crossing, 1}, {E::Crossing, 0}, {E::Crossing, 1}},
       {{E::Crossing, 0}, {E::Crossing, 1}, {E::Crossing, 0}}},
      // zigzags (descending, ascending); classified plus/minus by orientation
      {MoveKind::DestabPlus, {{E::LeftCusp, 1}, {E::RightCusp, 0}}, {}},
      {MoveKind::DestabPlus, {{E::LeftCusp, 0}, {E::RightCusp, 1}}, {}},
      // two opposite zigzags in a row along one strand
      {MoveKind::CancelStabPair,
       {{E::LeftCusp, 1}, {E::RightCusp, 0}, {E::LeftCusp, 0}, {E::RightCusp, 1}},
       {}},
      {MoveKind::CancelStabPair,
       {{E::LeftCusp, 0}, {E::RightCusp, 1}, {E::LeftCusp, 1}, {E::RightCusp, 0}},
       {}},
  };
  return table;
}

Word letters_to_word(const std::vector<Letter>& letters, int base) {
  Word w;
  for (const Letter& l : letters) w.push_back({l.kind, base + l.offset, 0, 0});
  return w;
}

// Base position when `events` (consecutive) spell `letters`, or 0.
int match_letters(const Word& word, std::size_t first, const std::vector<Letter>& letters) {
  if (first + letters.size() > word.size()) return 0;
  int base = word[first].pos - letters[0].offset;
  if (base < 1) return 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const Event& e = word[first + k];
    if (e.kind != letters[k].kind || e.pos != base + letters[k].offset) return 0;
  }
  return base;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::size_t next_event(const Word& word, std::size_t state, int q) {
  for (std::size_t k = state; k < word.size(); ++k) {
    const Event& e = word[k];
    const int i = e.pos;
    switch (e.kind) {
      case E::LeftCusp:
        if (q >= i) q += 2;
        break;
      case E::RightCusp:
        if (q == i || q == i + 1) return k;
        if (q > i + 1) q -= 2;
        break;
      case E::Crossing:
        if (q == i || q == i + 1) return k;
        break;
    }
  }
  return kNone;
}

std::size_t prev_event(const Word& word, std::size_t state, int q) {
  for (std::size_t k = state; k-- > 0;) {
    const Event& e = word[k];
    const int i = e.pos;
    switch (e.kind) {
      case E::LeftCusp:
        if (q == i || q == i + 1) return k;
        if (q > i + 1) q -= 2;
        break;
      case E::RightCusp:
        if (q >= i) q += 2;
        break;
      case E::Crossing:
        if (q == i || q == i + 1) return k;
        break;
    }
  }
  return kNone;
}

std::vector<std::vector<std::size_t>> strand_neighbors(const Word& word) {
  std::vector<std::vector<std::size_t>> nb(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    const Event& e = word[j];
    if (e.kind != E::RightCusp) {
      for (int q : {e.pos, e.pos + 1}) {
        std::size_t k = next_event(word, j + 1, q);
        if (k != kNone) nb[j].push_back(k);
      }
    }
    if (e.kind != E::LeftCusp) {
      for (int q : {e.pos, e.pos + 1}) {
        std::size_t k = prev_event(word, j, q);
        if (k != kNone) nb[j].push_back(k);
      }
    }
    std::sort(nb[j].begin(), nb[j].end());
    nb[j].erase(std::unique(nb[j].begin(), nb[j].end()), nb[j].end());
  }
  return nb;
}

struct Match {
  std::size_t pattern;
  std::vector<std::size_t> events;
  Word arranged;  // word with the pattern made consecutive
  std::size_t first = 0;
  int base = 0;
};

// Strand-connected sets of events, taken in every order that spells the
// kinds of some pattern, which can be made consecutive and then match it.
std::vector<Match> find_matches(const Word& word, int edges) {
  std::vector<Match> out;
  if (word.empty()) return out;
  const auto nb = strand_neighbors(word);

  std::set<std::vector<std::size_t>> sets;
  std::vector<std::size_t> cur;
  auto grow = [&](auto&& self) -> void {
    std::vector<std::size_t> key = cur;
    std::sort(key.begin(), key.end());
    if (!sets.insert(key).second) return;
    if (cur.size() == 4) return;
    for (std::size_t t : key) {
      for (std::size_t c : nb[t]) {
        if (std::find(cur.begin(), cur.end(), c) != cur.end()) continue;
        cur.push_back(c);
        self(self);
        cur.pop_back();
      }
    }
  };
  for (std::size_t j = 0; j < word.size(); ++j) {
    cur.assign(1, j);
    grow(grow);
  }

  for (const auto& set : sets) {
    for (std::size_t pi = 0; pi < patterns().size(); ++pi) {
      const Pattern& pat = patterns()[pi];
      if (pat.lhs.size() != set.size()) continue;
      std::vector<std::size_t> perm = set;
      do {
        bool kinds = true;
        for (std::size_t k = 0; k < perm.size() && kinds; ++k) kinds = word[perm[k]].kind == pat.lhs[k].kind;
        if (!kinds) continue;
        auto arranged = make_consecutive(word, edges, perm);
        if (!arranged) continue;
        int base = match_letters(arranged->first, arranged->second, pat.lhs);
        if (base == 0) continue;
        out.push_back({pi, perm, std::move(arranged->first), arranged->second, base});
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  // deterministic order: by pattern, then by event tuple
  std::sort(out.begin(), out.end(), [](const Match& a, const Match& b) {
    return std::tie(a.pattern, a.events) < std::tie(b.pattern, b.events);
  });
  return out;
}

bool zigzag_is_plus(const Word& arranged, std::size_t first) {
  return cusp_is_down(arranged[first]) && cusp_is_down(arranged[first + 1]);
}

bool once_over_some_handle(const FrontDiagram& d, int comp) {
  const auto& g = d.components()[static_cast<std::size_t>(comp)].geometric_passages;
  return std::any_of(g.begin(), g.end(), [](int v) { return v == 1; });
}

// Remainder of the word once `prefix` has been commuted to its front, if
// possible. Backtracks, since equal events may be interchangeable.
std::optional<Word> extract_prefix(const Word& word, int edges, const Word& prefix) {
  const auto dep = dependency_matrix(word, edges);
  std::vector<std::size_t> ids(word.size());
  for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = k;

  auto step = [&](auto&& self, const Word& rem, const std::vector<std::size_t>& rem_ids,
                  std::size_t done) -> std::optional<Word> {
    if (done == prefix.size()) return rem;
    const Event& want = prefix[done];
    for (std::size_t j = 0; j < rem.size(); ++j) {
      bool minimal = true;
      for (std::size_t i = 0; i < j && minimal; ++i) minimal = !dep[rem_ids[i]][rem_ids[j]];
      if (!minimal) continue;
      Event e = rem[j];
      for (std::size_t i = j; i-- > 0;) e = swap_adjacent(rem[i], e).first;
      if (e.kind != want.kind || e.pos != want.pos) continue;
      Word next = rem;
      std::vector<std::size_t> next_ids = rem_ids;
      for (std::size_t i = j; i-- > 0;) {
        auto [a, b] = swap_adjacent(next[i], next[i + 1]);
        next[i] = a;
        next[i + 1] = b;
        std::swap(next_ids[i], next_ids[i + 1]);
      }
      next.erase(next.begin());
      next_ids.erase(next_ids.begin());
      if (auto r = self(self, next, next_ids, done + 1)) return r;
    }
    return std::nullopt;
  };
  return step(step, word, ids, 0);
}

int block_sign(const FrontDiagram& d, int handle) {
  const int first = d.block_start(handle);
  const int count = d.ports()[static_cast<std::size_t>(handle - 1)];
  int sign = 0;
  for (int k = first; k < first + count; ++k) {
    int w = d.wraps()[static_cast<std::size_t>(k - 1)];
    int s = w > 0 ? 1 : w < 0 ? -1 : 0;
    if (s == 0) return 0;
    if (sign != 0 && s != sign) return 0;
    sign = s;
  }
  return sign;
}

bool wrap_allowed(const FrontDiagram& d, int handle, int sign) {
  const int first = d.block_start(handle);
  const int count = d.ports()[static_cast<std::size_t>(handle - 1)];
  for (int k = first; k < first + count; ++k) {
    if (sign * d.wraps()[static_cast<std::size_t>(k - 1)] < 0) return false;
  }
  return true;
}

std::vector<int> shifted_wraps(const FrontDiagram& d, int handle, int delta) {
  std::vector<int> w = d.wraps();
  const int first = d.block_start(handle);
  const int count = d.ports()[static_cast<std::size_t>(handle - 1)];
  for (int k = first; k < first + count; ++k) w[static_cast<std::size_t>(k - 1)] += delta;
  return w;
}

[[noreturn]] void not_applicable(const MoveInstance& m, const std::string& why) {
  throw Error(ErrorKind::NotApplicable, move_spec(m) + ": " + why);
}

MoveKind match_kind(const Match& mt) {
  const Pattern& pat = patterns()[mt.pattern];
  if (pat.kind == MoveKind::DestabPlus) {
    return zigzag_is_plus(mt.arranged, mt.first) ? MoveKind::DestabPlus : MoveKind::DestabMinus;
  }
  return pat.kind;
}

}  // namespace

Word ribbon_word(int block_first, int block_size, int edges, int sign) {
  if (sign < 0) {
    // Build the descending ribbon for the mirrored block and reflect it.
    const int mirrored_first = edges - block_first - block_size + 2;
    Word down = ribbon_word(mirrored_first, block_size, edges, 1);
    Word out;
    int m = edges;
    for (const Event& e : down) {
      Event f = e;
      f.pos = e.kind == E::LeftCusp ? m + 2 - e.pos : m - e.pos;
      out.push_back(f);
      m += strand_delta(e.kind);
    }
    return out;
  }
  // Labels: s_j incoming strands, u_j / v_j upper / lower branches of the
  // left cusp of copy j.
  struct Label {
    char tag;
    int copy;
  };
  std::vector<Label> strands;
  for (int k = 1; k <= edges; ++k) strands.push_back({'e', k});
  for (int j = 0; j < block_size; ++j) strands[static_cast<std::size_t>(block_first - 1 + j)] = {'s', j};
  Word out;
  auto index_of = [&](char tag, int copy) {
    for (std::size_t k = 0; k < strands.size(); ++k) {
      if (strands[k].tag == tag && strands[k].copy == copy) return static_cast<int>(k) + 1;
    }
    return 0;
  };
  auto cross_up = [&](char tag, int copy, char stop_tag, int stop_copy) {
    // raise a strand until it sits directly below (stop_tag, stop_copy)
    while (true) {
      int p = index_of(tag, copy);
      int target = index_of(stop_tag, stop_copy);
      if (p == target + 1) break;
      out.push_back(crossing(p - 1));
      std::swap(strands[static_cast<std::size_t>(p - 2)], strands[static_cast<std::size_t>(p - 1)]);
    }
  };
  // left cusps stacked below the block
  const int below = block_first + block_size;
  for (int j = 0; j < block_size; ++j) {
    int pos = below + 2 * j;
    out.push_back(left_cusp(pos));
    strands.insert(strands.begin() + pos - 1, {{'u', j}, {'v', j}});
  }
  // u_j climbs over v_0..v_{j-1}
  for (int j = 1; j < block_size; ++j) cross_up('u', j, 'u', j - 1);
  // u_j climbs over s_{j+1}.. to sit below s_j
  for (int j = 0; j < block_size; ++j) cross_up('u', j, 's', j);
  for (int j = 0; j < block_size; ++j) {
    int p = index_of('s', j);
    out.push_back(right_cusp(p));
    strands.erase(strands.begin() + p - 1, strands.begin() + p + 1);
  }
  return out;
}

std::vector<MoveInstance> applicable_moves(const FrontDiagram& d) {
  std::vector<MoveInstance> out;
  const Word& word = d.word();

  // insertions on every strand segment that starts at an event or the edge
  for (std::size_t t = 0; t < d.widths().size(); ++t) {
    for (int p = 1; p <= d.width(t); ++p) {
      bool edge_start = t == 0;
      if (t > 0) {
        const Event& e = word[t - 1];
        edge_start = e.kind != E::RightCusp && (p == e.pos || p == e.pos + 1);
      }
      if (!edge_start) continue;
      for (int v = 0; v < 2; ++v) {
        MoveInstance m;
        m.kind = MoveKind::R1Insert;
        m.state = t;
        m.pos = p;
        m.variant = v;
        out.push_back(m);
      }
      for (MoveKind k : {MoveKind::StabPlus, MoveKind::StabMinus}) {
        MoveInstance m;
        m.kind = k;
        m.state = t;
        m.pos = p;
        out.push_back(m);
      }
    }
  }

  for (std::size_t j = 0; j < word.size(); ++j) {
    const Event& e = word[j];
    if (e.kind == E::Crossing) continue;
    const int m_pre = d.width(j);
    const bool above = e.pos >= 2;
    const bool below = e.kind == E::LeftCusp ? e.pos <= m_pre : e.pos + 2 <= m_pre;
    for (int v = 0; v < 2; ++v) {
      if ((v == 0 && !above) || (v == 1 && !below)) continue;
      MoveInstance m;
      m.kind = MoveKind::R2Insert;
      m.events = {j};
      m.variant = v;
      out.push_back(m);
    }
  }

  for (const Match& mt : find_matches(word, d.edge_count())) {
    MoveInstance m;
    m.kind = match_kind(mt);
    m.events = mt.events;
    if (m.kind == MoveKind::CancelStabPair &&
        !once_over_some_handle(d, d.component_of(mt.events[0] + 1, word[mt.events[0]].pos))) {
      continue;
    }
    out.push_back(std::move(m));
  }

  for (int g = 1; g <= d.handles(); ++g) {
    if (d.ports()[static_cast<std::size_t>(g - 1)] == 0) continue;
    const int sign = block_sign(d, g);
    if (sign != 0) {
      MoveInstance m;
      m.kind = MoveKind::Move6Unwrap;
      m.handle = g;
      m.sign = sign;
      out.push_back(m);
    }
    for (int s : {1, -1}) {
      if (!wrap_allowed(d, g, s)) continue;
      MoveInstance m;
      m.kind = MoveKind::Move6Wrap;
      m.handle = g;
      m.sign = s;
      out.push_back(m);
    }
    for (int k : {1, -1}) {
      MoveInstance m;
      m.kind = MoveKind::RcPower;
      m.handle = g;
      m.power = k;
      out.push_back(m);
    }
  }
  return out;
}

std::vector<MoveInstance> isotopy_moves(const FrontDiagram& d) {
  std::vector<MoveInstance> all = applicable_moves(d);
  std::vector<MoveInstance> out;
  for (auto& m : all) {
    if (is_isotopy(m.kind)) out.push_back(std::move(m));
  }
  return out;
}

FrontDiagram rc_power(const FrontDiagram& d, int handle, int power) {
  if (handle < 1 || handle > d.handles()) {
    throw Error(ErrorKind::NotApplicable, "rc_power: no handle " + std::to_string(handle));
  }
  if (power == 0) return d;
  return d.with_wraps(shifted_wraps(d, handle, power));
}

FrontDiagram apply(const FrontDiagram& d, const MoveInstance& m) {
  const Word& word = d.word();
  switch (m.kind) {
    case MoveKind::R1Insert:
    case MoveKind::StabPlus:
    case MoveKind::StabMinus: {
      if (m.state >= d.widths().size() || m.pos < 1 || m.pos > d.width(m.state)) {
        not_applicable(m, "no such strand segment");
      }
      const int p = m.pos;
      Word ins;
      if (m.kind == MoveKind::R1Insert) {
        ins = m.variant == 0 ? Word{left_cusp(p + 1), crossing(p), right_cusp(p + 1)}
                             : Word{left_cusp(p), crossing(p + 1), right_cusp(p)};
      } else {
        // descending zigzag adds rot +1 on a rightward strand
        const int sigma = d.dir(m.state, p);
        const bool descend = (m.kind == MoveKind::StabPlus) == (sigma > 0);
        ins = descend ? Word{left_cusp(p + 1), right_cusp(p)} : Word{left_cusp(p), right_cusp(p + 1)};
      }
      return d.splice(m.state, m.state, ins, d.wraps());
    }
    case MoveKind::R2Insert: {
      if (m.events.size() != 1 || m.events[0] >= word.size()) not_applicable(m, "bad cusp index");
      const std::size_t j = m.events[0];
      const Event& e = word[j];
      const int m_pre = d.width(j);
      const int i = e.pos;
      Word rep;
      if (e.kind == E::LeftCusp) {
        if (m.variant == 0 && i >= 2) rep = {left_cusp(i - 1), crossing(i), crossing(i - 1)};
        if (m.variant == 1 && i <= m_pre) rep = {left_cusp(i + 1), crossing(i), crossing(i + 1)};
      } else if (e.kind == E::RightCusp) {
        if (m.variant == 0 && i >= 2) rep = {crossing(i - 1), crossing(i), right_cusp(i - 1)};
        if (m.variant == 1 && i + 2 <= m_pre) rep = {crossing(i + 1), crossing(i), right_cusp(i + 1)};
      }
      if (rep.empty()) not_applicable(m, "no neighboring strand on that side of a cusp");
      return d.splice(j, j + 1, rep, d.wraps());
    }
    case MoveKind::R1Remove:
    case MoveKind::R2Remove:
    case MoveKind::R3:
    case MoveKind::DestabPlus:
    case MoveKind::DestabMinus:
    case MoveKind::CancelStabPair: {
      for (std::size_t k : m.events) {
        if (k >= word.size()) not_applicable(m, "event index out of range");
      }
      auto arranged = make_consecutive(word, d.edge_count(), m.events);
      if (!arranged) not_applicable(m, "events cannot be made adjacent");
      for (std::size_t pi = 0; pi < patterns().size(); ++pi) {
        const Pattern& pat = patterns()[pi];
        if (pat.lhs.size() != m.events.size()) continue;
        int base = match_letters(arranged->first, arranged->second, pat.lhs);
        if (base == 0) continue;
        Match mt{pi, m.events, arranged->first, arranged->second, base};
        if (match_kind(mt) != m.kind) continue;
        if (m.kind == MoveKind::CancelStabPair &&
            !once_over_some_handle(d, d.component_of(m.events[0] + 1, word[m.events[0]].pos))) {
          not_applicable(m, "component does not pass exactly once over a handle");
        }
        FrontDiagram mid = FrontDiagram::from_oriented(d.handles(), d.ports(), d.wraps(),
                                                       arranged->first, d.port_dirs());
        return mid.splice(arranged->second, arranged->second + pat.lhs.size(),
                          letters_to_word(pat.rhs, base), d.wraps());
      }
      not_applicable(m, "pattern not found");
    }
    case MoveKind::Move6Unwrap: {
      if (m.handle < 1 || m.handle > d.handles()) not_applicable(m, "no such handle");
      const int sign = block_sign(d, m.handle);
      if (sign == 0 || (m.sign != 0 && m.sign != sign)) {
        not_applicable(m, "wraps of the handle are not all nonzero with one sign");
      }
      Word ribbon = ribbon_word(d.block_start(m.handle), d.ports()[static_cast<std::size_t>(m.handle - 1)],
                                d.edge_count(), sign);
      return d.splice(0, 0, ribbon, shifted_wraps(d, m.handle, -sign));
    }
    case MoveKind::Move6Wrap: {
      if (m.handle < 1 || m.handle > d.handles()) not_applicable(m, "no such handle");
      if (m.sign != 1 && m.sign != -1) not_applicable(m, "ribbon sign must be + or -");
      if (d.ports()[static_cast<std::size_t>(m.handle - 1)] == 0) not_applicable(m, "no strand passes the handle");
      if (!wrap_allowed(d, m.handle, m.sign)) not_applicable(m, "wraps have the opposite sign");
      Word ribbon = ribbon_word(d.block_start(m.handle), d.ports()[static_cast<std::size_t>(m.handle - 1)],
                                d.edge_count(), m.sign);
      auto wraps = shifted_wraps(d, m.handle, m.sign);
      if (auto rest = extract_prefix(word, d.edge_count(), ribbon)) {
        // exact inverse of Move6Unwrap
        return FrontDiagram::from_oriented(d.handles(), d.ports(), std::move(wraps), std::move(*rest),
                                           d.port_dirs());
      }
      // otherwise pay for the extra wrap with an opposite ribbon
      Word opposite = ribbon_word(d.block_start(m.handle), d.ports()[static_cast<std::size_t>(m.handle - 1)],
                                  d.edge_count(), -m.sign);
      return d.splice(0, 0, opposite, wraps);
    }
    case MoveKind::RcPower:
      return rc_power(d, m.handle, m.power);
  }
  not_applicable(m, "unknown move");
}

FrontDiagram replay(const FrontDiagram& start, const Certificate& cert) {
  FrontDiagram d = canonicalize(start);
  for (const MoveInstance& m : cert.moves) d = canonicalize(apply(d, m));
  return d;
}

// ---- move-spec text ----

namespace {

std::string join_events(const std::vector<std::size_t>& ev) {
  std::string s;
  for (std::size_t k = 0; k < ev.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(ev[k] + 1);
  }
  return s;
}

[[noreturn]] void bad_spec(std::string_view spec, const std::string& why) {
  throw Error(ErrorKind::SyntaxError, "move spec '" + std::string(spec) + "': " + why);
}

long read_int(std::string_view& s, std::string_view spec) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc()) bad_spec(spec, "expected an integer");
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return v;
}

std::vector<std::size_t> read_events(std::string_view s, std::string_view spec) {
  std::vector<std::size_t> out;
  while (true) {
    long v = read_int(s, spec);
    if (v < 1) bad_spec(spec, "event indices are 1-based");
    out.push_back(static_cast<std::size_t>(v - 1));
    if (s.empty()) break;
    if (s.front() != ',') bad_spec(spec, "expected ','");
    s.remove_prefix(1);
  }
  return out;
}

void read_segment(std::string_view& s, std::string_view spec, MoveInstance& m) {
  long t = read_int(s, spec);
  if (s.empty() || s.front() != '.') bad_spec(spec, "expected <state>.<pos>");
  s.remove_prefix(1);
  long p = read_int(s, spec);
  if (t < 0 || p < 1) bad_spec(spec, "bad segment");
  m.state = static_cast<std::size_t>(t);
  m.pos = static_cast<int>(p);
}

}  // namespace

std::string move_spec(const MoveInstance& m) {
  auto seg = [&] { return std::to_string(m.state) + "." + std::to_string(m.pos); };
  switch (m.kind) {
    case MoveKind::R1Insert: return "r1+@" + seg() + (m.variant == 0 ? "b" : "a");
    case MoveKind::R1Remove: return "r1-@" + join_events(m.events);
    case MoveKind::R2Insert:
      return "r2+@" + join_events(m.events) + (m.variant == 0 ? "u" : "d");
    case MoveKind::R2Remove: return "r2-@" + join_events(m.events);
    case MoveKind::R3: return "r3@" + join_events(m.events);
    case MoveKind::StabPlus: return "s+@" + seg();
    case MoveKind::StabMinus: return "s-@" + seg();
    case MoveKind::DestabPlus: return "d+@" + join_events(m.events);
    case MoveKind::DestabMinus: return "d-@" + join_events(m.events);
    case MoveKind::Move6Unwrap: return "m6-@h" + std::to_string(m.handle);
    case MoveKind::Move6Wrap:
      return "m6+@h" + std::to_string(m.handle) + (m.sign > 0 ? "+" : "-");
    case MoveKind::CancelStabPair: return "cs@" + join_events(m.events);
    case MoveKind::RcPower: return "rc^" + std::to_string(m.power) + "@h" + std::to_string(m.handle);
  }
  return "?";
}

MoveInstance parse_move_spec(std::string_view spec) {
  const auto at = spec.find('@');
  if (at == std::string_view::npos) bad_spec(spec, "missing '@'");
  std::string_view head = spec.substr(0, at);
  std::string_view loc = spec.substr(at + 1);
  if (loc.empty()) bad_spec(spec, "missing location");
  MoveInstance m;

  auto handle_loc = [&](std::string_view s) {
    if (s.empty() || s.front() != 'h') bad_spec(spec, "expected h<g>");
    s.remove_prefix(1);
    long g = read_int(s, spec);
    if (g < 1) bad_spec(spec, "handles are 1-based");
    m.handle = static_cast<int>(g);
    return s;
  };

  if (head == "r1+" || head == "s+" || head == "s-") {
    read_segment(loc, spec, m);
    if (head == "r1+") {
      m.kind = MoveKind::R1Insert;
      if (loc == "b") m.variant = 0;
      else if (loc == "a") m.variant = 1;
      else bad_spec(spec, "expected suffix a or b");
    } else {
      if (!loc.empty()) bad_spec(spec, "trailing characters");
      m.kind = head == "s+" ? MoveKind::StabPlus : MoveKind::StabMinus;
    }
  } else if (head == "r2+") {
    m.kind = MoveKind::R2Insert;
    char side = loc.back();
    if (side != 'u' && side != 'd') bad_spec(spec, "expected suffix u or d");
    m.variant = side == 'u' ? 0 : 1;
    m.events = read_events(loc.substr(0, loc.size() - 1), spec);
  } else if (head == "r1-" || head == "r2-" || head == "r3" || head == "d+" || head == "d-" || head == "cs") {
    m.kind = head == "r1-" ? MoveKind::R1Remove
             : head == "r2-" ? MoveKind::R2Remove
             : head == "r3"  ? MoveKind::R3
             : head == "d+"  ? MoveKind::DestabPlus
             : head == "d-"  ? MoveKind::DestabMinus
                             : MoveKind::CancelStabPair;
    m.events = read_events(loc, spec);
  } else if (head == "m6-") {
    m.kind = MoveKind::Move6Unwrap;
    if (loc.front() == 'p') bad_spec(spec, "port locations need a diagram");
    if (!handle_loc(loc).empty()) bad_spec(spec, "trailing characters");
  } else if (head == "m6+") {
    m.kind = MoveKind::Move6Wrap;
    std::string_view rest = handle_loc(loc);
    if (rest == "+") m.sign = 1;
    else if (rest == "-") m.sign = -1;
    else bad_spec(spec, "expected ribbon sign + or -");
  } else if (head.substr(0, 3) == "rc^") {
    m.kind = MoveKind::RcPower;
    std::string_view k = head.substr(3);
    long v = read_int(k, spec);
    if (!k.empty()) bad_spec(spec, "bad power");
    m.power = static_cast<int>(v);
    if (!handle_loc(loc).empty()) bad_spec(spec, "trailing characters");
  } else {
    bad_spec(spec, "unknown move");
  }
  return m;
}

MoveInstance parse_move_spec(std::string_view spec, const FrontDiagram& d) {
  const auto at = spec.find('@');
  if (at != std::string_view::npos && at + 1 < spec.size() && spec.substr(0, at) == "m6-" &&
      spec[at + 1] == 'p') {
    std::string_view s = spec.substr(at + 2);
    long k = read_int(s, spec);
    if (!s.empty() || k < 1 || k > d.edge_count()) bad_spec(spec, "no such port");
    MoveInstance m;
    m.kind = MoveKind::Move6Unwrap;
    m.handle = d.handle_of_port(static_cast<int>(k));
    return m;
  }
  return parse_move_spec(spec);
}

}  // namespace legendra
