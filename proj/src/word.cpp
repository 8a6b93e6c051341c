#include "legendra/word.hpp"

#include <algorithm>
#include <tuple>

namespace legendra {

namespace {

struct Footprint {
  int in_lo, in_hi, out_lo, out_hi;
};

Footprint footprint(const Event& e) {
  const int i = e.pos;
  switch (e.kind) {
    case EventKind::LeftCusp: return {2 * i - 1, 2 * i - 1, 2 * i, 2 * i + 2};
    case EventKind::RightCusp: return {2 * i, 2 * i + 2, 2 * i - 1, 2 * i - 1};
    case EventKind::Crossing: return {2 * i, 2 * i + 2, 2 * i, 2 * i + 2};
  }
  return {0, 0, 0, 0};
}

auto sort_key(const Event& e) {
  return std::make_tuple(e.pos, static_cast<int>(e.kind), e.dir_hi, e.dir_lo);
}

}  // namespace

bool commutes(const Event& first, const Event& second) {
  Footprint a = footprint(first);
  Footprint b = footprint(second);
  return b.in_hi < a.out_lo || b.in_lo > a.out_hi;
}

std::pair<Event, Event> swap_adjacent(const Event& first, const Event& second) {
  Footprint a = footprint(first);
  Footprint b = footprint(second);
  Event s = second;
  Event f = first;
  if (b.in_hi < a.out_lo) {
    f.pos += strand_delta(second.kind);
  } else {
    s.pos -= strand_delta(first.kind);
  }
  return {s, f};
}

std::vector<std::vector<bool>> dependency_matrix(const Word& word, int start) {
  const std::size_t len = word.size();
  std::vector<int> widths = strand_counts(word, start);
  int max_width = *std::max_element(widths.begin(), widths.end());
  const std::size_t span = static_cast<std::size_t>(2 * max_width + 8);

  std::vector<std::vector<bool>> dep(len, std::vector<bool>(len, false));
  std::vector<char> cone(span), next(span);
  for (std::size_t a = 0; a < len; ++a) {
    std::fill(cone.begin(), cone.end(), 0);
    Footprint fa = footprint(word[a]);
    for (int x = fa.out_lo; x <= fa.out_hi; ++x) cone[static_cast<std::size_t>(x)] = 1;
    for (std::size_t k = a + 1; k < len; ++k) {
      const Event& e = word[k];
      const int i = e.pos;
      std::fill(next.begin(), next.end(), 0);
      bool hit = false;
      switch (e.kind) {
        case EventKind::Crossing:
          next = cone;
          for (int x = 2 * i; x <= 2 * i + 2; ++x) hit = hit || cone[static_cast<std::size_t>(x)];
          if (hit) {
            for (int x = 2 * i; x <= 2 * i + 2; ++x) next[static_cast<std::size_t>(x)] = 1;
          }
          break;
        case EventKind::LeftCusp: {
          const int g = 2 * i - 1;
          for (int x = 0; x + 4 < static_cast<int>(span); ++x) {
            if (!cone[static_cast<std::size_t>(x)]) continue;
            if (x < g) next[static_cast<std::size_t>(x)] = 1;
            else if (x == g) next[static_cast<std::size_t>(g)] = next[static_cast<std::size_t>(g + 4)] = 1;
            else next[static_cast<std::size_t>(x + 4)] = 1;
          }
          hit = cone[static_cast<std::size_t>(g)] != 0;
          if (hit) {
            for (int x = 2 * i; x <= 2 * i + 2; ++x) next[static_cast<std::size_t>(x)] = 1;
          }
          break;
        }
        case EventKind::RightCusp:
          for (int x = 0; x < static_cast<int>(span); ++x) {
            if (!cone[static_cast<std::size_t>(x)]) continue;
            if (x < 2 * i) next[static_cast<std::size_t>(x)] = 1;
            else if (x <= 2 * i + 2) hit = true;
            else next[static_cast<std::size_t>(x - 4)] = 1;
          }
          if (hit) next[static_cast<std::size_t>(2 * i - 1)] = 1;
          break;
      }
      dep[a][k] = hit;
      cone.swap(next);
    }
  }
  return dep;
}

namespace {

// Bubble sort toward target ranks using only legal adjacent swaps.
bool reorder(Word& word, std::vector<std::size_t>& rank) {
  const std::size_t len = word.size();
  for (std::size_t pass = 0; pass < len; ++pass) {
    bool changed = false;
    for (std::size_t j = 0; j + 1 < len; ++j) {
      if (rank[j] <= rank[j + 1]) continue;
      if (!commutes(word[j], word[j + 1])) return false;
      auto [s, f] = swap_adjacent(word[j], word[j + 1]);
      word[j] = s;
      word[j + 1] = f;
      std::swap(rank[j], rank[j + 1]);
      changed = true;
    }
    if (!changed) break;
  }
  return true;
}

}  // namespace

std::optional<std::pair<Word, std::size_t>> make_consecutive(const Word& word, int start,
                                                             std::span<const std::size_t> pattern) {
  if (pattern.empty()) return std::make_pair(word, std::size_t{0});
  const std::size_t lo = *std::min_element(pattern.begin(), pattern.end());
  const std::size_t hi = *std::max_element(pattern.begin(), pattern.end());
  bool contiguous = hi - lo + 1 == pattern.size();
  for (std::size_t k = 0; contiguous && k < pattern.size(); ++k) contiguous = pattern[k] == lo + k;
  if (contiguous) return std::make_pair(word, lo);

  auto dep = dependency_matrix(word, start);
  auto in_pattern = [&](std::size_t k) {
    return std::find(pattern.begin(), pattern.end(), k) != pattern.end();
  };
  for (std::size_t x = 0; x < pattern.size(); ++x) {
    for (std::size_t y = x + 1; y < pattern.size(); ++y) {
      if (pattern[y] < pattern[x] && dep[pattern[y]][pattern[x]]) return std::nullopt;
    }
  }
  std::vector<std::size_t> before, after;
  for (std::size_t k = lo + 1; k < hi; ++k) {
    if (in_pattern(k)) continue;
    bool must_before = false, must_after = false;
    for (std::size_t q : pattern) {
      if (q > k && dep[k][q]) must_before = true;
      if (q < k && dep[q][k]) must_after = true;
    }
    if (must_before && must_after) return std::nullopt;
    (must_after ? after : before).push_back(k);
  }

  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < lo; ++k) order.push_back(k);
  order.insert(order.end(), before.begin(), before.end());
  const std::size_t first = order.size();
  order.insert(order.end(), pattern.begin(), pattern.end());
  order.insert(order.end(), after.begin(), after.end());
  for (std::size_t k = hi + 1; k < word.size(); ++k) order.push_back(k);

  std::vector<std::size_t> rank(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  Word out = word;
  if (!reorder(out, rank)) return std::nullopt;
  return std::make_pair(std::move(out), first);
}

Word canonical_word(const Word& word, int start) {
  auto dep = dependency_matrix(word, start);
  std::vector<std::size_t> ids(word.size());
  for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = k;
  Word rem = word;
  Word out;
  out.reserve(word.size());

  while (!rem.empty()) {
    std::size_t best = rem.size();
    Event best_event{};
    for (std::size_t j = 0; j < rem.size(); ++j) {
      bool minimal = true;
      for (std::size_t i = 0; i < j && minimal; ++i) minimal = !dep[ids[i]][ids[j]];
      if (!minimal) continue;
      Event e = rem[j];
      for (std::size_t i = j; i-- > 0;) e = swap_adjacent(rem[i], e).first;
      if (best == rem.size() || sort_key(e) < sort_key(best_event)) {
        best = j;
        best_event = e;
      }
    }
    // move it to the front for real
    for (std::size_t i = best; i-- > 0;) {
      auto [s, f] = swap_adjacent(rem[i], rem[i + 1]);
      rem[i] = s;
      rem[i + 1] = f;
      std::swap(ids[i], ids[i + 1]);
    }
    out.push_back(rem.front());
    rem.erase(rem.begin());
    ids.erase(ids.begin());
  }
  return out;
}

}  // namespace legendra
