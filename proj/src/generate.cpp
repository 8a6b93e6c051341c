#include "legendra/generate.hpp"

#include "legendra/builtins.hpp"
#include "legendra/canonical.hpp"
#include "legendra/moves.hpp"

namespace legendra {

namespace {

FrontDiagram walk(std::mt19937_64& rng, FrontDiagram d, int steps, std::size_t max_events, bool allow_rc) {
  d = canonicalize(d);
  for (int k = 0; k < steps; ++k) {
    std::vector<MoveInstance> moves = applicable_moves(d);
    std::erase_if(moves, [&](const MoveInstance& m) { return !allow_rc && m.kind == MoveKind::RcPower; });
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    FrontDiagram next = canonicalize(apply(d, moves[pick(rng)]));
    if (next.word().size() > max_events) continue;
    d = std::move(next);
  }
  return d;
}

}  // namespace

FrontDiagram random_diagram(std::mt19937_64& rng, int steps, std::size_t max_events) {
  const std::vector<BuiltinSpec> corpus = builtin_corpus();
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  return walk(rng, builtin(corpus[pick(rng)]), steps, max_events, true);
}

FrontDiagram random_null_homologous(std::mt19937_64& rng, int steps, std::size_t max_events) {
  static const std::vector<BuiltinSpec> seeds = {
      {"unknot", 0}, {"shark_left", 0}, {"shark_right", 0}, {"L", 0}, {"L", 1}, {"L", -1}};
  std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
  return walk(rng, builtin(seeds[pick(rng)]), steps, max_events, false);
}

}  // namespace legendra
