#pragma once

#include <vector>

#include "fdslab/bitset.hpp"

namespace fdslab {

// Exact solvers over an undirected graph given as bitset adjacency rows.
// All of them are plain branch and bound, sized for desk-scale instances.

struct MisResult {
    int size = 0;
    std::vector<int> members;
};

// Exact maximum independent set. If pin >= 0 that vertex is forced into the
// set; only sound when some maximum independent set contains it (e.g. any
// vertex of a vertex-transitive graph).
MisResult max_independent_set(const std::vector<Bitset>& adj, int pin = -1);

struct ColouringResult {
    int colours = 0;
    std::vector<int> colouring;  // colour per vertex, 0-based
};

// Exact chromatic number. `lower_bound` may come from outside knowledge
// (clique size, covering bound); `seeds` are candidate colourings that are
// validated and used as incumbents if proper.
ColouringResult exact_chromatic(const std::vector<Bitset>& adj, int lower_bound = 1,
                                const std::vector<std::vector<int>>& seeds = {});

bool colouring_is_proper(const std::vector<Bitset>& adj, const std::vector<int>& colouring);

// Exact minimum cover of [0, universe) by the given sets (branch on an
// uncovered element, try every set containing it).
struct CoverResult {
    int size = 0;
    std::vector<int> chosen;
};
CoverResult min_set_cover(int universe, const std::vector<Bitset>& sets);

}  // namespace fdslab
