#pragma once

#include <iosfwd>
#include <span>

#include "fdslab/digraph.hpp"
#include "fdslab/fds.hpp"
#include "fdslab/logcount.hpp"
#include "fdslab/solvers.hpp"

namespace fdslab {

// The guessing (confusion) graph of (D, q): vertices are the states of
// [q]^n, and x ~ y whenever some coordinate v sees the same in-neighbourhood
// context in both but a different own value — i.e. no FDS over D can fix
// both. Vertex-transitive under coordinatewise translation.
class GuessingGraph {
public:
    static GuessingGraph build(const Digraph& d, int q, std::uint64_t cap = graph_state_cap());

    int q() const { return space_.q(); }
    int n() const { return space_.n(); }
    const Digraph& digraph() const { return d_; }
    const StateSpace& space() const { return space_; }
    int vertex_count() const { return static_cast<int>(space_.size()); }
    bool adjacent(State x, State y) const { return adj_[x].test(static_cast<int>(y)); }
    const std::vector<Bitset>& adjacency() const { return adj_; }

private:
    GuessingGraph(const Digraph& d, int q, std::uint64_t cap);
    Digraph d_;
    StateSpace space_;
    std::vector<Bitset> adj_;
};

struct AlphaResult {
    int alpha = 0;
    std::vector<State> witness;  // a maximum independent set
};
// Exact independence number. The all-zero state is pinned into the set,
// which is lossless by vertex-transitivity.
AlphaResult independence_number(const GuessingGraph& g);

struct ChiResult {
    int chi = 0;
    std::vector<int> colouring;  // colour per state
};
// Exact chromatic number, seeded with structural colourings (diagonal
// translates, digit sums, covers derived from a maximum independent set)
// whenever those happen to be proper.
ChiResult chromatic_number(const GuessingGraph& g);

LogCount guessing_number(const Digraph& d, int q, std::uint64_t cap = graph_state_cap());
LogCount public_entropy(const Digraph& d, int q, std::uint64_t cap = graph_state_cap());

// Completes an independent set of G(D, q) into an FDS over D fixing all of
// it: each f_v copies the set's context -> value map and is 0 elsewhere.
Fds fds_from_independent_set(const Digraph& d, int q, std::span<const State> members);

// DIMACS graph export ("p edge ..." / "e u v", 1-based), for cross-checking
// with external solvers.
void write_dimacs(const GuessingGraph& g, std::ostream& out);

}  // namespace fdslab
