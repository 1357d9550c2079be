#pragma once

#include "fdslab/digraph.hpp"
#include "fdslab/fds.hpp"

namespace fdslab {

// Explicit FDSs with provable metric values, used as certified lower bounds
// and as fixtures. Every constructor re-verifies its claimed value by a full
// table scan (or per-block scan) and throws VerificationError on mismatch.

// f_v(x) = -sum_{u != v} x_u (mod q) on K:n; fixes exactly q^(n-1) states.
Fds clique_guessing(int n, int q);

// f_v(x) = v - sum_{u != v} x_u (mod q) on K:p with q colours, p <= q.
// Every state is guessed correctly by at most one coordinate, by exactly one
// when p = q.
Fds winkler_block(int p, int q);

// The p = q case: guarantees exactly one correct guess, s(f) = 1.
Fds winkler_clique(int q);

// floor(n/q) disjoint winkler cliques on K:n, constants elsewhere;
// s(f) = floor(n/q). Throws QTooLarge when q > n.
Fds clique_packing_stability(int n, int q);

// Disjoint winkler blocks of size q plus one residual block on K:n;
// i(f) = n - ceil(n/q).
Fds clique_instability(int n, int q);

// f_0 = x_{n-1} + 1 (mod q), f_j = x_{j-1} on Cdir:n; no fixed point and
// i(f) = 1.
Fds negation_cycle(int n, int q);

struct InstabilityConstruction {
    int q = 0;
    Fds f;
    int instability = 0;  // verified value, equals tau of the digraph
};

// Colour the chordless cycles so same-coloured cycles are disjoint; with
// q = 2^(number of colours), run one negation cycle per chordless cycle on
// its colour's bit. The agreement set of every state is then acyclic, so
// i(f) = tau(D).
InstabilityConstruction chordless_cover_instability(const Digraph& d,
                                                    std::size_t cycle_cap = kDefaultCycleCap);

// Undirected variant at q = 2^maxdegree: every edge carries a negation
// two-cycle between one bit of each endpoint (negated towards the larger
// endpoint), making the agreement set independent; i(f) = tau(D).
InstabilityConstruction undirected_degree_instability(const Digraph& d);

// Circulant matrix over GF(2) supported on the simplex:r digraph whose
// rowspace of M - I is a [2^r - 1, r] simplex code (every nonzero word of
// weight 2^(r-1)); the offset is a deepest coset representative, so the
// affine map attains i(f) = covering radius, while the linear part has
// s = 2^(r-1) - 1. Supported for r in {2, 3, 4}.
AffineFds simplex_affine(int r);

}  // namespace fdslab
