#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdslab/bitset.hpp"
#include "fdslab/errors.hpp"

namespace fdslab {

inline constexpr std::size_t kDefaultCycleCap = 100000;

// Loopless digraph on vertices 0..n-1. Immutable after construction.
// Undirected graphs are represented as symmetric digraphs, one digon per
// edge; there is no separate undirected type.
class Digraph {
public:
    Digraph(int n, std::vector<std::pair<int, int>> arcs, std::string name = "");

    // Graph file format: '#' comments, first payload line "n <count>",
    // then one "u v" arc per line; a "symmetrize" directive replaces every
    // arc by a digon.
    static Digraph parse(std::string_view text);

    // Family DSL: K:n, Kbip:m,s, Cdir:n, Cund:n, paley:p, power:Cdir:g^k,
    // simplex:r.
    static Digraph family(const std::string& spec);

    int n() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    bool has_arc(int u, int v) const { return out_mask_[u].test(v); }

    const std::vector<int>& in(int v) const { return in_[v]; }
    const std::vector<int>& out(int v) const { return out_[v]; }
    const Bitset& in_mask(int v) const { return in_mask_[v]; }
    const Bitset& out_mask(int v) const { return out_mask_[v]; }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int max_in_degree() const;
    int max_out_degree() const;

    // Every arc paired with its reverse.
    bool symmetric() const;

    const std::string& name() const { return name_; }

    bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;  // sorted, deduplicated
    std::vector<std::vector<int>> in_, out_;
    std::vector<Bitset> in_mask_, out_mask_;
    std::string name_;
};

Digraph strong_product(const Digraph& a, const Digraph& b);

// Length of a shortest directed cycle; nullopt when acyclic.
std::optional<int> girth(const Digraph& d);

struct CycleSet {
    // Each cycle is its vertex sequence, starting at its smallest vertex;
    // listed once (a directed cycle has a unique rotation-normal form).
    std::vector<std::vector<int>> cycles;
    bool truncated = false;
};

// All chordless (induced) directed cycles, up to the cap.
CycleSet chordless_cycles(const Digraph& d, std::size_t cap = kDefaultCycleCap);

struct CyclePacking {
    int value = 0;
    std::vector<std::vector<int>> cycles;  // pairwise vertex-disjoint witness
};

// Exact maximum number of vertex-disjoint cycles. Works over the chordless
// cycle list: shortcutting the chords of any packed cycle yields a chordless
// cycle on a subset of its vertices, so the optimum is unchanged.
CyclePacking cycle_packing(const Digraph& d, std::size_t cap = kDefaultCycleCap);

struct FeedbackVertexSet {
    int value = 0;
    std::vector<int> vertices;
};

// Exact minimum feedback vertex set via branch and bound on the vertices of
// a shortest remaining cycle. Desk-scale cap n <= 64.
FeedbackVertexSet feedback_vertex_number(const Digraph& d);

// Exact chromatic number of the intersection graph of chordless cycles
// (cycles adjacent when they share a vertex).
int cycle_chromatic_index(const Digraph& d, std::size_t cap = kDefaultCycleCap);

// Topological order of the vertices outside `removed`; throws NotAcyclic.
std::vector<int> topological_order(const Digraph& d, const std::vector<int>& removed = {});

}  // namespace fdslab
