#include "fdslab/guessgraph.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "fdslab/parallel.hpp"

namespace fdslab {

GuessingGraph::GuessingGraph(const Digraph& d, int q, std::uint64_t cap)
    : d_(d), space_(q, d.n(), cap) {
    int size = static_cast<int>(space_.size());
    int n = d.n();

    // Bucket states per coordinate: all states sharing the in-neighbourhood
    // context of v form a clique-union partitioned by their own value at v.
    // adj(x) = union over v of (same context, different x_v).
    adj_.assign(size, Bitset(size));
    for (int v = 0; v < n; ++v) {
        const auto& inn = d_.in(v);
        std::uint64_t contexts = 1;
        for (std::size_t i = 0; i < inn.size(); ++i) contexts *= q;
        std::vector<Bitset> bucket(contexts, Bitset(size));
        std::vector<Bitset> group(contexts * q, Bitset(size));
        std::vector<std::uint32_t> ctx_of(size);
        for (State x = 0; x < space_.size(); ++x) {
            std::uint64_t ctx = 0;
            for (int u : inn) ctx = ctx * q + space_.digit(x, u);
            ctx_of[x] = static_cast<std::uint32_t>(ctx);
            bucket[ctx].set(static_cast<int>(x));
            group[ctx * q + space_.digit(x, v)].set(static_cast<int>(x));
        }
        parallel_for(size, [&](std::int64_t lo, std::int64_t hi) {
            for (std::int64_t x = lo; x < hi; ++x) {
                std::uint64_t ctx = ctx_of[x];
                Bitset others = bucket[ctx];
                others.subtract(group[ctx * q + space_.digit(static_cast<State>(x), v)]);
                adj_[x] |= others;
            }
        });
    }
}

GuessingGraph GuessingGraph::build(const Digraph& d, int q, std::uint64_t cap) {
    return GuessingGraph(d, q, cap);
}

AlphaResult independence_number(const GuessingGraph& g) {
    auto mis = max_independent_set(g.adjacency(), /*pin=*/0);
    AlphaResult res;
    res.alpha = mis.size;
    for (int v : mis.members) res.witness.push_back(static_cast<State>(v));
    return res;
}

namespace {

// Diagonal-translate colouring: colour(x) = x - (d, d, ..., d) with
// d = x_0. Proper whenever every vertex has an in-neighbour.
std::vector<int> diagonal_seed(const GuessingGraph& g) {
    const auto& sp = g.space();
    State diag_unit = 0;
    for (int v = 0; v < g.n(); ++v) diag_unit = static_cast<State>(diag_unit * g.q() + 1);
    std::vector<int> colouring(g.vertex_count());
    for (State x = 0; x < sp.size(); ++x) {
        int d = sp.digit(x, 0);
        State diag = 0;
        for (int v = 0; v < g.n(); ++v) diag = static_cast<State>(diag * g.q() + d);
        colouring[x] = static_cast<int>(sp.sub(x, diag));
    }
    // compact colour ids
    std::map<int, int> remap;
    for (int& c : colouring) {
        auto [it, fresh] = remap.emplace(c, static_cast<int>(remap.size()));
        c = it->second;
    }
    return colouring;
}

// Digit-sum colouring, proper for complete digraphs (adjacency = Hamming
// distance one).
std::vector<int> digit_sum_seed(const GuessingGraph& g) {
    const auto& sp = g.space();
    std::vector<int> colouring(g.vertex_count());
    for (State x = 0; x < sp.size(); ++x) {
        int s = 0;
        for (int v = 0; v < g.n(); ++v) s = (s + sp.digit(x, v)) % g.q();
        colouring[x] = s;
    }
    return colouring;
}

// Cover by translates of a maximum independent set F: classes F - a over
// a = (0 on a minimum feedback vertex set, free elsewhere). Covers the whole
// space whenever |F| = q^tau; colour = first covering class.
std::vector<int> coset_seed(const GuessingGraph& g, const std::vector<State>& witness) {
    const auto& sp = g.space();
    auto fvs = feedback_vertex_number(g.digraph());
    int tau = fvs.value;
    std::uint64_t classes = 1;
    for (int i = 0; i < g.n() - tau; ++i) classes *= g.q();
    std::vector<bool> on_fvs(g.n(), false);
    for (int v : fvs.vertices) on_fvs[v] = true;
    std::vector<int> free_coords;
    for (int v = 0; v < g.n(); ++v)
        if (!on_fvs[v]) free_coords.push_back(v);

    std::vector<int> colouring(g.vertex_count(), -1);
    std::vector<int> digits(g.n(), 0);
    for (std::uint64_t c = 0; c < classes; ++c) {
        std::uint64_t rest = c;
        std::fill(digits.begin(), digits.end(), 0);
        for (int v : free_coords) {
            digits[v] = static_cast<int>(rest % g.q());
            rest /= g.q();
        }
        State a = sp.encode(digits);
        for (State z : witness) {
            State x = sp.sub(z, a);
            if (colouring[x] < 0) colouring[x] = static_cast<int>(c);
        }
    }
    for (int c : colouring)
        if (c < 0) return {};  // not a cover; discard
    return colouring;
}

}  // namespace

ChiResult chromatic_number(const GuessingGraph& g) {
    auto alpha = independence_number(g);
    int lower = static_cast<int>((g.space().size() + alpha.alpha - 1) / alpha.alpha);

    std::vector<std::vector<int>> seeds;
    bool all_have_inputs = true;
    for (int v = 0; v < g.n(); ++v)
        if (g.digraph().in_degree(v) == 0) all_have_inputs = false;
    if (all_have_inputs) seeds.push_back(diagonal_seed(g));
    seeds.push_back(digit_sum_seed(g));
    auto coset = coset_seed(g, alpha.witness);
    if (!coset.empty()) seeds.push_back(coset);

    auto res = exact_chromatic(g.adjacency(), lower, seeds);
    return ChiResult{res.colours, res.colouring};
}

LogCount guessing_number(const Digraph& d, int q, std::uint64_t cap) {
    auto g = GuessingGraph::build(d, q, cap);
    return LogCount{static_cast<std::uint64_t>(independence_number(g).alpha), q};
}

LogCount public_entropy(const Digraph& d, int q, std::uint64_t cap) {
    auto g = GuessingGraph::build(d, q, cap);
    return LogCount{static_cast<std::uint64_t>(chromatic_number(g).chi), q};
}

Fds fds_from_independent_set(const Digraph& d, int q, std::span<const State> members) {
    StateSpace sp(q, d.n());
    int n = d.n();
    // per coordinate: context -> forced value (members of an independent set
    // never disagree on a shared context)
    std::vector<std::map<std::uint64_t, int>> forced(n);
    for (State x : members) {
        for (int v = 0; v < n; ++v) {
            std::uint64_t ctx = 0;
            for (int u : d.in(v)) ctx = ctx * q + sp.digit(x, u);
            auto [it, fresh] = forced[v].emplace(ctx, sp.digit(x, v));
            if (!fresh && it->second != sp.digit(x, v))
                throw VerificationError("set is not independent: conflicting contexts");
        }
    }
    std::vector<State> table(sp.size());
    for (State x = 0; x < sp.size(); ++x) {
        State y = 0;
        for (int v = 0; v < n; ++v) {
            std::uint64_t ctx = 0;
            for (int u : d.in(v)) ctx = ctx * q + sp.digit(x, u);
            auto it = forced[v].find(ctx);
            int val = it == forced[v].end() ? 0 : it->second;
            y = static_cast<State>(y * q + val);
        }
        table[x] = y;
    }
    return Fds(q, n, std::move(table));
}

void write_dimacs(const GuessingGraph& g, std::ostream& out) {
    std::uint64_t edges = 0;
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = g.adjacency()[x].find_next(x + 1); y >= 0;
             y = g.adjacency()[x].find_next(y + 1))
            ++edges;
    out << "p edge " << g.vertex_count() << ' ' << edges << '\n';
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = g.adjacency()[x].find_next(x + 1); y >= 0;
             y = g.adjacency()[x].find_next(y + 1))
            out << "e " << x + 1 << ' ' << y + 1 << '\n';
}

}  // namespace fdslab
