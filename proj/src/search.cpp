#include "legendra/search.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <unordered_map>

#include "legendra/canonical.hpp"
#include "legendra/error.hpp"
#include "legendra/invariants.hpp"

namespace legendra {

std::string_view to_string(NotFoundReason reason) {
  switch (reason) {
    case NotFoundReason::None: return "None";
    case NotFoundReason::InvariantMismatch: return "InvariantMismatch";
    case NotFoundReason::DepthExhausted: return "DepthExhausted";
    case NotFoundReason::NodeLimit: return "NodeLimit";
  }
  return "?";
}

namespace {

std::string fmt_vec(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s + ")";
}

std::string mismatch(const FrontDiagram& a, const FrontDiagram& b) {
  const InvariantReport ra = invariants(a);
  const InvariantReport rb = invariants(b);
  if (ra.winding != rb.winding) return "winding " + fmt_vec(ra.winding) + " vs " + fmt_vec(rb.winding);
  if (ra.rot != rb.rot) return "rot " + std::to_string(ra.rot) + " vs " + std::to_string(rb.rot);
  if (ra.tb && rb.tb && *ra.tb != *rb.tb) return "tb " + std::to_string(*ra.tb) + " vs " + std::to_string(*rb.tb);
  return {};
}

class Searcher {
 public:
  Searcher(const FrontDiagram& target, std::size_t max_nodes)
      : target_(target), target_fp_(fingerprint_canonical(target)), max_nodes_(max_nodes) {}

  // True when a path of at most `budget` moves reaches the target.
  bool run(const FrontDiagram& start, int budget) {
    visited_.clear();
    path_.clear();
    visited_[fingerprint_canonical(start)] = budget;
    return dfs(start, budget);
  }

  const std::vector<MoveInstance>& path() const { return path_; }
  std::size_t nodes() const { return nodes_; }
  bool out_of_nodes() const { return nodes_ >= max_nodes_; }

 private:
  bool dfs(const FrontDiagram& d, int budget) {
    if (budget == 0 || out_of_nodes()) return false;
    ++nodes_;
    for (const MoveInstance& m : isotopy_moves(d)) {
      FrontDiagram next = canonicalize(apply(d, m));
      const std::uint64_t fp = fingerprint_canonical(next);
      if (fp == target_fp_ && next == target_) {
        path_.push_back(m);
        return true;
      }
      auto it = visited_.find(fp);
      if (it != visited_.end() && it->second >= budget - 1) continue;
      visited_[fp] = budget - 1;
      path_.push_back(m);
      if (dfs(next, budget - 1)) return true;
      path_.pop_back();
      if (out_of_nodes()) return false;
    }
    return false;
  }

  const FrontDiagram& target_;
  std::uint64_t target_fp_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  std::unordered_map<std::uint64_t, int> visited_;
  std::vector<MoveInstance> path_;
};

}  // namespace

EquivResult equiv_search(const FrontDiagram& a, const FrontDiagram& b, const SearchLimits& limits) {
  EquivResult result;
  if (std::string why = mismatch(a, b); !why.empty()) {
    result.reason = NotFoundReason::InvariantMismatch;
    result.detail = why;
    return result;
  }
  const FrontDiagram start = canonicalize(a);
  const FrontDiagram target = canonicalize(b);
  if (start == target) {
    result.found = true;
    return result;
  }
  Searcher searcher(target, limits.max_nodes);
  for (int budget = 1; budget <= limits.depth; ++budget) {
    if (searcher.run(start, budget)) {
      result.certificate.moves = searcher.path();
      result.nodes = searcher.nodes();
      if (!(replay(a, result.certificate) == target)) {
        throw Error(ErrorKind::SearchExhausted, "certificate failed to replay");
      }
      result.found = true;
      return result;
    }
    if (searcher.out_of_nodes()) {
      result.reason = NotFoundReason::NodeLimit;
      result.detail = "node limit " + std::to_string(limits.max_nodes) + " reached at depth " + std::to_string(budget);
      result.nodes = searcher.nodes();
      return result;
    }
  }
  result.reason = NotFoundReason::DepthExhausted;
  result.detail = "no certificate up to depth " + std::to_string(limits.depth);
  result.nodes = searcher.nodes();
  return result;
}

FrontDiagram stabilized_core(int sign, int n) {
  FrontDiagram d = FrontDiagram::from_oriented(1, {1}, {0}, {}, {1});
  MoveInstance m;
  m.kind = sign < 0 ? MoveKind::StabMinus : MoveKind::StabPlus;
  m.state = 0;
  m.pos = 1;
  for (int k = 0; k < n; ++k) d = apply(d, m);
  return canonicalize(d);
}

namespace {

int last_event(const MoveInstance& m) {
  return m.events.empty() ? -1 : static_cast<int>(*std::max_element(m.events.begin(), m.events.end()));
}

bool removes_something(MoveKind k) { return k == MoveKind::R1Remove || k == MoveKind::R2Remove; }

// Next move of the deterministic pass, or nothing when it stalls.
std::optional<MoveInstance> next_simplification(const FrontDiagram& d) {
  const std::vector<MoveInstance> moves = applicable_moves(d);
  // (a) crossing elimination, rightmost pattern first
  std::optional<MoveInstance> best;
  for (const MoveInstance& m : moves) {
    if (!removes_something(m.kind)) continue;
    if (!best || last_event(m) > last_event(*best)) best = m;
  }
  if (best) return best;
  // (b) wrap reduction
  for (const MoveInstance& m : moves) {
    if (m.kind == MoveKind::Move6Unwrap) return m;
  }
  // (c) cancel opposite stabilizations
  for (const MoveInstance& m : moves) {
    if (m.kind == MoveKind::CancelStabPair) return m;
  }
  // R3 that unlocks a removal
  for (const MoveInstance& m : moves) {
    if (m.kind != MoveKind::R3) continue;
    const FrontDiagram next = canonicalize(apply(d, m));
    for (const MoveInstance& n : applicable_moves(next)) {
      if (removes_something(n.kind)) return m;
    }
  }
  return std::nullopt;
}

// Best-first search toward `target`, ordered by word length plus total
// |wrap|; ties broken by discovery order so results are reproducible.
std::optional<Certificate> descend(const FrontDiagram& start, const FrontDiagram& target,
                                   std::size_t max_nodes) {
  struct Node {
    FrontDiagram d;
    std::size_t parent;
    MoveInstance move;
  };
  auto cost = [](const FrontDiagram& d) {
    std::size_t c = d.word().size();
    for (int w : d.wraps()) c += static_cast<std::size_t>(std::abs(w)) * 2;
    return c;
  };
  std::vector<Node> nodes;
  nodes.push_back({start, 0, {}});
  using Entry = std::pair<std::size_t, std::size_t>;  // (cost, node index)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  std::unordered_map<std::uint64_t, bool> seen;
  seen[fingerprint_canonical(start)] = true;
  open.push({cost(start), 0});
  const std::uint64_t target_fp = fingerprint_canonical(target);
  std::size_t expanded = 0;
  while (!open.empty() && expanded < max_nodes) {
    const std::size_t at = open.top().second;
    open.pop();
    ++expanded;
    const FrontDiagram here = nodes[at].d;
    for (const MoveInstance& m : isotopy_moves(here)) {
      FrontDiagram next = canonicalize(apply(here, m));
      const std::uint64_t fp = fingerprint_canonical(next);
      if (!seen.emplace(fp, true).second) continue;
      nodes.push_back({next, at, m});
      if (fp == target_fp && next == target) {
        Certificate cert;
        for (std::size_t k = nodes.size() - 1; k != 0; k = nodes[k].parent) cert.moves.push_back(nodes[k].move);
        std::reverse(cert.moves.begin(), cert.moves.end());
        return cert;
      }
      open.push({cost(next), nodes.size() - 1});
    }
  }
  return std::nullopt;
}

}  // namespace

NormalForm normalize(const FrontDiagram& d, const SearchLimits& limits) {
  if (d.components().size() != 1) throw Error(ErrorKind::NotOnceOver, "diagram has more than one component");
  if (d.handles() != 1) throw Error(ErrorKind::NotOnceOver, "ambient manifold must have exactly one handle");
  if (d.components().front().geometric_passages.front() != 1) {
    throw Error(ErrorKind::NotOnceOver, "knot must pass exactly once over the handle");
  }
  NormalForm nf;
  const int r = rot(d);
  nf.sign = r > 0 ? 1 : r < 0 ? -1 : 0;
  nf.n = std::abs(r);
  const FrontDiagram target = stabilized_core(nf.sign, nf.n);

  FrontDiagram cur = canonicalize(d);
  while (!(cur == target)) {
    auto m = next_simplification(cur);
    if (!m) break;
    nf.certificate.moves.push_back(*m);
    cur = canonicalize(apply(cur, *m));
  }
  if (!(cur == target)) {
    auto rest = descend(cur, target, limits.fallback_nodes);
    if (!rest) {
      throw Error(ErrorKind::SearchExhausted, "deterministic pass stalled and the fallback search gave up after " +
                                                  std::to_string(limits.fallback_nodes) + " diagrams");
    }
    nf.certificate.moves.insert(nf.certificate.moves.end(), rest->moves.begin(), rest->moves.end());
  }
  return nf;
}

FrontDiagram scramble(const FrontDiagram& d, int moves, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FrontDiagram cur = canonicalize(d);
  for (int k = 0; k < moves; ++k) {
    const std::vector<MoveInstance> options = isotopy_moves(cur);
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    cur = canonicalize(apply(cur, options[pick(rng)]));
  }
  return cur;
}

}  // namespace legendra
