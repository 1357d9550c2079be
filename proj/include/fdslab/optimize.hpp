#pragma once

#include <optional>

#include "fdslab/digraph.hpp"
#include "fdslab/fds.hpp"
#include "fdslab/logcount.hpp"

namespace fdslab {

enum class SearchMode { Exhaustive, Randomized, ConstructionOnly };

struct SearchBudget {
    SearchMode mode = SearchMode::ConstructionOnly;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    // Exhaustive runs enumerate the whole space and never consult analytic
    // bounds, so they double as independent verification. Setting this lets
    // an exhaustive run stop early once the incumbent meets an analytic cap.
    bool analytic_pruning = false;
};

// How a reported value is certified.
//   Exact        — full enumeration of the candidate space.
//   WitnessOnly  — best witness found; a one-sided bound only.
//   BoundMatched — witness meets an analytic bound from the other side,
//                  hence exact.
enum class Certified { Exact, WitnessOnly, BoundMatched };

// Serialization. Witness-only values bound a maximum from below and a
// minimum from above; the label says which.
const char* certified_label(Certified c, bool minimizing);

struct ExtremalResult {
    long long value = 0;   // i, s, g_lin
    LogCount count{0, 2};  // l, c (counts)
    bool is_count = false;
    Certified certified = Certified::WitnessOnly;
    std::optional<Fds> witness;
    std::optional<AffineFds> affine_witness;
    std::uint64_t candidates = 0;  // evaluated candidates
    std::uint64_t prunes = 0;      // candidates rejected early
};

// max over f in F(D,q) of min_x d_H(x, f(x))
ExtremalResult instability(const Digraph& d, int q, const SearchBudget& budget);

// max over f in F(D,q) of min_x (n - d_H(x, f(x)))
ExtremalResult stability(const Digraph& d, int q, const SearchBudget& budget);

// min over f in F(D,q) of |C_f| (as a log_q count)
ExtremalResult guessing_dimension_of_graph(const Digraph& d, int q, const SearchBudget& budget);

// min over f in F(D,q) of the minimum translate cover of fix(f)
ExtremalResult coset_dimension_of_graph(const Digraph& d, int q, const SearchBudget& budget);

// max over supported matrices M of n - rank(M - I); q must be a prime power
ExtremalResult linear_guessing(const Digraph& d, int q, const SearchBudget& budget);

// max over supported M of the covering radius of rowspace(M - I): the best
// affine offset realizes the covering radius, so this is the affine
// instability of the digraph
ExtremalResult affine_instability(const Digraph& d, int q, const SearchBudget& budget);

// max over supported M of n - remoteness(rowspace(M - I))
ExtremalResult affine_stability(const Digraph& d, int q, const SearchBudget& budget);

}  // namespace fdslab
