#include "fdslab/construct.hpp"

#include <algorithm>

#include "fdslab/coding.hpp"
#include "fdslab/solvers.hpp"

namespace fdslab {

namespace {

// Builds the table of f from per-coordinate evaluators.
template <typename LocalFn>
Fds build_fds(int q, int n, LocalFn&& local) {
    StateSpace sp(q, n);
    std::vector<State> table(sp.size());
    for (State x = 0; x < sp.size(); ++x) {
        State y = 0;
        for (int v = 0; v < n; ++v) y = static_cast<State>(y * q + local(sp, x, v));
        table[x] = y;
    }
    return Fds(q, n, std::move(table));
}

void require(bool ok, const std::string& what) {
    if (!ok) throw VerificationError("construction self-check failed: " + what);
}

}  // namespace

Fds clique_guessing(int n, int q) {
    if (n < 2) throw InputError("clique_guessing needs n >= 2");
    Fds f = build_fds(q, n, [n, q](const StateSpace& sp, State x, int v) {
        int sum = 0;
        for (int u = 0; u < n; ++u)
            if (u != v) sum += sp.digit(x, u);
        return ((-sum) % q + q) % q;
    });
    std::uint64_t expected = 1;
    for (int i = 0; i < n - 1; ++i) expected *= q;
    require(fixed_points(f).size() == expected, "clique guessing fixed-point count");
    return f;
}

Fds winkler_block(int p, int q) {
    if (p < 2 || p > q) throw InputError("winkler_block needs 2 <= p <= q");
    Fds f = build_fds(q, p, [p, q](const StateSpace& sp, State x, int v) {
        int sum = 0;
        for (int u = 0; u < p; ++u)
            if (u != v) sum += sp.digit(x, u);
        return ((v - sum) % q + q) % q;
    });
    auto m = metrics(f);
    require(m.i == p - 1, "winkler block instability");
    require(m.s == (p == q ? 1 : 0), "winkler block stability");
    return f;
}

Fds winkler_clique(int q) { return winkler_block(q, q); }

namespace {

// Assembles coordinate-disjoint blocks (block maps on their own coordinates,
// constant 0 elsewhere) into one FDS on n coordinates.
Fds assemble_blocks(int n, int q, const std::vector<std::pair<int, Fds>>& blocks) {
    StateSpace sp(q, n);
    std::vector<State> table(sp.size());
    for (State x = 0; x < sp.size(); ++x) {
        std::vector<int> out(n, 0);
        for (const auto& [start, block] : blocks) {
            std::vector<int> digits(block.n());
            for (int j = 0; j < block.n(); ++j) digits[j] = sp.digit(x, start + j);
            State bx = block.space().encode(digits);
            State by = block.apply(bx);
            for (int j = 0; j < block.n(); ++j) out[start + j] = block.space().digit(by, j);
        }
        table[x] = sp.encode(out);
    }
    return Fds(q, n, std::move(table));
}

}  // namespace

Fds clique_packing_stability(int n, int q) {
    if (q > n) throw QTooLarge("clique packing needs q <= n");
    int k = n / q;
    std::vector<std::pair<int, Fds>> blocks;
    for (int b = 0; b < k; ++b) blocks.emplace_back(b * q, winkler_clique(q));
    Fds f = assemble_blocks(n, q, blocks);
    require(metrics(f).s == k, "clique packing stability value");
    return f;
}

Fds clique_instability(int n, int q) {
    if (n < 2) throw InputError("clique_instability needs n >= 2");
    int k = n / q;  // full blocks of size q
    int r = n - k * q;
    std::vector<std::pair<int, Fds>> blocks;
    for (int b = 0; b < k; ++b) blocks.emplace_back(b * q, winkler_block(q, q));
    if (r >= 2) blocks.emplace_back(k * q, winkler_block(r, q));
    Fds f = assemble_blocks(n, q, blocks);
    int expected = n - (n + q - 1) / q;
    require(metrics(f).i == expected, "clique instability value");
    return f;
}

Fds negation_cycle(int n, int q) {
    if (n < 2) throw InputError("negation_cycle needs n >= 2");
    Fds f = build_fds(q, n, [n, q](const StateSpace& sp, State x, int v) {
        if (v == 0) return (sp.digit(x, n - 1) + 1) % q;
        return sp.digit(x, v - 1);
    });
    auto m = metrics(f);
    require(m.g.count == 0, "negation cycle has no fixed point");
    require(m.i == 1, "negation cycle instability");
    return f;
}

InstabilityConstruction chordless_cover_instability(const Digraph& d, std::size_t cycle_cap) {
    auto cs = chordless_cycles(d, cycle_cap);
    if (cs.truncated) throw CapExceeded("chordless cycle enumeration truncated");
    int n = d.n();
    int tau = feedback_vertex_number(d).value;

    if (cs.cycles.empty()) {
        Fds constant = build_fds(2, n, [](const StateSpace&, State, int) { return 0; });
        return {2, std::move(constant), 0};
    }

    // colour the cycles so same-coloured ones are vertex-disjoint
    int m = static_cast<int>(cs.cycles.size());
    std::vector<Bitset> vertex_sets(m, Bitset(n));
    for (int i = 0; i < m; ++i)
        for (int v : cs.cycles[i]) vertex_sets[i].set(v);
    std::vector<Bitset> conflicts(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (vertex_sets[i].intersects(vertex_sets[j])) {
                conflicts[i].set(j);
                conflicts[j].set(i);
            }
    auto colouring = exact_chromatic(conflicts);
    int chi = colouring.colours;

    // role[v][alpha]: predecessor on v's colour-alpha cycle, negated when v
    // starts the cycle; absent otherwise
    struct Role {
        int pred = -1;
        bool negate = false;
    };
    std::vector<std::vector<Role>> role(n, std::vector<Role>(chi));
    for (int i = 0; i < m; ++i) {
        int alpha = colouring.colouring[i];
        const auto& cyc = cs.cycles[i];
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            Role& r = role[cyc[k]][alpha];
            require(r.pred == -1, "vertex on two same-coloured cycles");
            r.pred = cyc[(k + cyc.size() - 1) % cyc.size()];
            r.negate = k == 0;
        }
    }

    int q = 1 << chi;
    Fds f = build_fds(q, n, [&](const StateSpace& sp, State x, int v) {
        int value = 0;
        for (int alpha = 0; alpha < chi; ++alpha) {
            const Role& r = role[v][alpha];
            if (r.pred < 0) continue;
            int bit = (sp.digit(x, r.pred) >> alpha) & 1;
            if (r.negate) bit ^= 1;
            value |= bit << alpha;
        }
        return value;
    });
    require(metrics(f).i == tau, "chordless cover instability equals tau");
    return {q, std::move(f), tau};
}

InstabilityConstruction undirected_degree_instability(const Digraph& d) {
    if (!d.symmetric()) throw NotSymmetric("construction needs an undirected graph");
    int n = d.n();
    int delta = d.max_in_degree();
    if (delta > 4) throw CapExceeded("degree construction capped at maximum degree 4");
    int tau = feedback_vertex_number(d).value;
    if (delta == 0) {
        Fds constant = build_fds(2, n, [](const StateSpace&, State, int) { return 0; });
        return {2, std::move(constant), 0};
    }

    // position of u within the sorted in-neighbour list of v
    auto position = [&](int u, int v) {
        const auto& inn = d.in(v);
        return static_cast<int>(std::lower_bound(inn.begin(), inn.end(), u) - inn.begin());
    };

    int q = 1 << delta;
    Fds f = build_fds(q, n, [&](const StateSpace& sp, State x, int v) {
        int value = 0;
        for (int slot = 0; slot < d.in_degree(v); ++slot) {
            int u = d.in(v)[slot];
            int bit = (sp.digit(x, u) >> position(v, u)) & 1;
            if (v < u) bit ^= 1;
            value |= bit << slot;
        }
        return value;
    });
    require(metrics(f).i == tau, "degree construction instability equals tau");
    return {q, std::move(f), tau};
}

AffineFds simplex_affine(int r) {
    if (r < 2 || r > 4) throw BadR("simplex_affine supports r in {2, 3, 4}");
    Digraph d = Digraph::family("simplex:" + std::to_string(r));
    int n = d.n();
    const Field& gf2 = Field::get(2);

    Mat m(n, n);
    for (auto [u, v] : d.arcs()) m.at(u, v) = 1;
    AffineFds linear(gf2, m, std::vector<int>(n, 0), d);

    Mat diff = linear.difference_matrix();
    Mat echelon = diff;
    int rank = row_echelon(gf2, echelon);
    require(rank == r, "simplex rowspace dimension");
    auto words = coset_words(gf2, echelon, rank, std::vector<int>(n, 0));
    StateSpace sp(2, n);
    for (State w : words)
        require(w == 0 || sp.weight(w) == (1 << (r - 1)), "simplex codeword weights");

    auto survey = covering_radius_linear(gf2, diff);
    return AffineFds(gf2, std::move(m), survey.deep_coset_rep, d);
}

}  // namespace fdslab
