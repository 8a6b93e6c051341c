#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "legendra/front.hpp"

namespace legendra {

// Commutation calculus on front words. Two adjacent events commute when the
// second one's input footprint is disjoint from the first one's output
// footprint; footprints live on a refined axis where strand k sits at 2k and
// the gap above it at 2k-1. Swapping re-indexes whichever event lies below
// the other.

bool commutes(const Event& first, const Event& second);

// Returns (second', first') such that second' first' equals first second.
// Precondition: commutes(first, second).
std::pair<Event, Event> swap_adjacent(const Event& first, const Event& second);

// dependent[i][j] (i < j) is true when event j lies in the causal future of
// event i, i.e. j can never be moved to the left of i.
std::vector<std::vector<bool>> dependency_matrix(const Word& word, int start);

// Reorders the word so that the events at `pattern` (indices, in the given
// order) become consecutive. Returns the new word and the index of the
// first pattern event, or nothing when some event between them is forced to
// stay in the middle.
std::optional<std::pair<Word, std::size_t>> make_consecutive(const Word& word, int start,
                                                             std::span<const std::size_t> pattern);

// Representative of the commutation class: repeatedly emit, among the events
// that can be moved to the front, the one with the smallest
// (position, kind, directions) key.
Word canonical_word(const Word& word, int start);

}  // namespace legendra
