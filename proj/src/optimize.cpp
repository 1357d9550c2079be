#include "fdslab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fdslab/coding.hpp"
#include "fdslab/construct.hpp"
#include "fdslab/guessgraph.hpp"
#include "fdslab/solvers.hpp"

namespace fdslab {

const char* certified_label(Certified c, bool minimizing) {
    switch (c) {
        case Certified::Exact:
            return "exact";
        case Certified::WitnessOnly:
            return minimizing ? "upper-bound" : "lower-bound";
        case Certified::BoundMatched:
            return minimizing ? "lower-bound-matched" : "upper-bound-matched";
    }
    return "?";
}

namespace {

// Candidate space for F(D, q): one lookup table per vertex, indexed by the
// rank of the in-neighbourhood context. Context and own-digit tables are
// precomputed per state so a candidate evaluates in n lookups per state.
struct FdsFamily {
    const Digraph& d;
    int q, n;
    StateSpace sp;
    std::vector<std::vector<std::uint32_t>> ctx;  // [v][x]
    std::vector<std::vector<std::uint8_t>> own;   // [v][x]
    std::vector<std::uint64_t> table_size;        // q^ind(v)

    FdsFamily(const Digraph& d_, int q_, std::uint64_t cap = state_cap())
        : d(d_), q(q_), n(d_.n()), sp(q_, d_.n(), cap) {
        ctx.resize(n);
        own.resize(n);
        table_size.resize(n);
        for (int v = 0; v < n; ++v) {
            std::uint64_t ts = 1;
            for (int i = 0; i < d.in_degree(v); ++i) ts *= q;
            table_size[v] = ts;
            ctx[v].resize(sp.size());
            own[v].resize(sp.size());
            for (State x = 0; x < sp.size(); ++x) {
                std::uint64_t c = 0;
                for (int u : d.in(v)) c = c * q + sp.digit(x, u);
                ctx[v][x] = static_cast<std::uint32_t>(c);
                own[v][x] = static_cast<std::uint8_t>(sp.digit(x, v));
            }
        }
    }

    // log2 of the candidate-space size
    double log2_size() const {
        double bits = 0;
        for (std::uint64_t ts : table_size) bits += static_cast<double>(ts) * std::log2(q);
        return bits;
    }

    using Tables = std::vector<std::vector<std::uint8_t>>;

    Tables first() const {
        Tables t(n);
        for (int v = 0; v < n; ++v) t[v].assign(table_size[v], 0);
        return t;
    }

    // Odometer step in lexicographic order (vertex 0's table most
    // significant); false once wrapped.
    bool next(Tables& t) const {
        for (int v = n - 1; v >= 0; --v)
            for (std::size_t i = t[v].size(); i-- > 0;) {
                if (++t[v][i] < q) return true;
                t[v][i] = 0;
            }
        return false;
    }

    void randomize(Tables& t, std::mt19937_64& rng) const {
        std::uniform_int_distribution<int> dist(0, q - 1);
        for (int v = 0; v < n; ++v)
            for (auto& e : t[v]) e = static_cast<std::uint8_t>(dist(rng));
    }

    Fds materialize(const Tables& t) const {
        std::vector<State> table(sp.size());
        for (State x = 0; x < sp.size(); ++x) {
            State y = 0;
            for (int v = 0; v < n; ++v) y = static_cast<State>(y * q + t[v][ctx[v][x]]);
            table[x] = y;
        }
        return Fds(q, n, std::move(table));
    }

    // min_x d_H(x, f(x)); returns early (with a value <= reject_at) as soon
    // as the minimum provably cannot exceed reject_at.
    int min_dh(const Tables& t, int reject_at) const {
        int cur = n + 1;
        for (State x = 0; x < sp.size(); ++x) {
            int dh = 0;
            for (int v = 0; v < n; ++v) {
                dh += t[v][ctx[v][x]] != own[v][x];
                if (dh >= cur) break;
            }
            if (dh < cur) {
                cur = dh;
                if (cur <= reject_at) return cur;
            }
        }
        return cur;
    }

    // max_x d_H(x, f(x)); returns early (>= reject_at) once the maximum
    // provably reaches reject_at.
    int max_dh(const Tables& t, int reject_at) const {
        int cur = -1;
        for (State x = 0; x < sp.size(); ++x) {
            int dh = 0;
            for (int v = 0; v < n; ++v) dh += t[v][ctx[v][x]] != own[v][x];
            if (dh > cur) {
                cur = dh;
                if (cur >= reject_at) return cur;
            }
        }
        return cur;
    }

    // |{f(x) - x}| in the group (Z mod q)^n.
    std::uint64_t code_size(const Tables& t) const {
        Bitset seen(static_cast<int>(sp.size()));
        std::vector<int> digits(n);
        for (State x = 0; x < sp.size(); ++x) {
            for (int v = 0; v < n; ++v)
                digits[v] = (t[v][ctx[v][x]] - own[v][x] + q) % q;
            seen.set(static_cast<int>(sp.encode(digits)));
        }
        return static_cast<std::uint64_t>(seen.count());
    }
};

void require_exhaustive_space(const FdsFamily& fam) {
    if (fam.log2_size() > 32.0)
        throw CapExceeded("candidate space exceeds 2^32 local-function tables");
}

// Analytic caps on i(D, q): the feedback bound and the complete-graph value
// (monotone under taking subgraphs).
int instability_upper_bound(const Digraph& d, int q, int tau) {
    return std::min(tau, d.n() - (d.n() + q - 1) / q);
}

// Analytic caps on s(D, q): complete-graph packing, the feedback bound at
// q = 2 with monotone decrease in q, the tau/p bound, and the staircase
// s(D, Q(m)) <= tau - m for q >= Q(m).
int stability_upper_bound(const Digraph& d, int q, int tau) {
    int ub = std::min(d.n() / q, tau);
    if (tau >= 1) {
        int p = 1;
        while (true) {
            std::int64_t pw = 1;
            bool over = false;
            for (int i = 0; i < tau; ++i) {
                pw *= (p + 1);
                if (pw > q - 1) {
                    over = true;
                    break;
                }
            }
            if (over) break;
            ++p;
        }
        ub = std::min(ub, tau / p);
        static constexpr int kQ[] = {3, 7, 34};
        for (int m = 1; m <= 3; ++m)
            if (q >= kQ[m - 1]) ub = std::min(ub, tau - m);
        ub = std::max(ub, 0);
    }
    return ub;
}

bool is_complete(const Digraph& d) {
    return d.arc_count() == static_cast<std::size_t>(d.n()) * (d.n() - 1);
}

// Best disjoint-digon packing (maximum matching of the symmetric part).
std::vector<std::pair<int, int>> digon_matching(const Digraph& d) {
    std::vector<std::pair<int, int>> digons;
    for (auto [u, v] : d.arcs())
        if (u < v && d.has_arc(v, u)) digons.emplace_back(u, v);
    int m = static_cast<int>(digons.size());
    if (m == 0) return {};
    std::vector<Bitset> conflict(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = digons[i];
            auto [c, e] = digons[j];
            if (a == c || a == e || b == c || b == e) {
                conflict[i].set(j);
                conflict[j].set(i);
            }
        }
    auto mis = max_independent_set(conflict);
    std::vector<std::pair<int, int>> chosen;
    for (int i : mis.members) chosen.push_back(digons[i]);
    return chosen;
}

// Shift-plus-one along each packed cycle, constants elsewhere; every block
// contributes exactly one forced disagreement, so i(f) = number of cycles.
Fds cycle_packing_witness(const Digraph& d, int q, const std::vector<std::vector<int>>& cycles) {
    StateSpace sp(q, d.n());
    std::vector<int> pred(d.n(), -1);
    std::vector<bool> negate(d.n(), false);
    for (const auto& cyc : cycles)
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            pred[cyc[k]] = cyc[(k + cyc.size() - 1) % cyc.size()];
            negate[cyc[k]] = k == 0;
        }
    std::vector<State> table(sp.size());
    for (State x = 0; x < sp.size(); ++x) {
        State y = 0;
        for (int v = 0; v < d.n(); ++v) {
            int val = 0;
            if (pred[v] >= 0) val = (sp.digit(x, pred[v]) + (negate[v] ? 1 : 0)) % q;
            y = static_cast<State>(y * q + val);
        }
        table[x] = y;
    }
    Fds f(q, d.n(), std::move(table));
    // verify per block: the block's own scan has minimum 1
    for (const auto& cyc : cycles) {
        StateSpace bs(q, static_cast<int>(cyc.size()));
        int best = static_cast<int>(cyc.size());
        for (State bx = 0; bx < bs.size(); ++bx) {
            int dh = 0;
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                int val = (bs.digit(bx, static_cast<int>((k + cyc.size() - 1) % cyc.size())) +
                           (k == 0 ? 1 : 0)) %
                          q;
                dh += val != bs.digit(bx, static_cast<int>(k));
            }
            best = std::min(best, dh);
        }
        if (best != 1) throw VerificationError("cycle block does not force one disagreement");
    }
    return f;
}

struct MinMaxSearch {
    ExtremalResult result;
    long long best = -1;
};

// Shared driver for the i / s searches over explicit local tables.
template <typename Evaluate>
void run_table_search(const FdsFamily& fam, const SearchBudget& budget, long long stop_at,
                      MinMaxSearch& out, Evaluate&& evaluate) {
    auto tabs = fam.first();
    if (budget.mode == SearchMode::Exhaustive) {
        require_exhaustive_space(fam);
        do {
            ++out.result.candidates;
            long long v = evaluate(tabs, out.best);
            if (v > out.best) {
                out.best = v;
                out.result.witness = fam.materialize(tabs);
            } else {
                ++out.result.prunes;
            }
            if (budget.analytic_pruning && out.best >= stop_at) break;
        } while (fam.next(tabs));
    } else {
        std::mt19937_64 rng(budget.seed);
        for (std::uint64_t t = 0; t < budget.trials && out.best < stop_at; ++t) {
            fam.randomize(tabs, rng);
            ++out.result.candidates;
            long long v = evaluate(tabs, out.best);
            if (v > out.best) {
                out.best = v;
                out.result.witness = fam.materialize(tabs);
            } else {
                ++out.result.prunes;
            }
        }
    }
}

}  // namespace

ExtremalResult instability(const Digraph& d, int q, const SearchBudget& budget) {
    int tau = feedback_vertex_number(d).value;
    int ub = instability_upper_bound(d, q, tau);

    MinMaxSearch search;
    search.result.is_count = false;

    if (budget.mode == SearchMode::Exhaustive) {
        FdsFamily fam(d, q);
        run_table_search(fam, budget, ub, search, [&](const FdsFamily::Tables& t, long long best) {
            return static_cast<long long>(fam.min_dh(t, static_cast<int>(best)));
        });
        search.result.certified =
            (budget.analytic_pruning && search.best >= ub) ? Certified::BoundMatched
                                                           : Certified::Exact;
    } else {
        // constructions: packed cycles always; winkler blocks on complete
        // graphs; the 2^chi' and degree constructions when q matches
        auto consider = [&](Fds f, int value) {
            if (value > search.best) {
                search.best = value;
                search.result.witness = std::move(f);
            }
            ++search.result.candidates;
        };
        StateSpace guard(q, d.n());  // cap check for witness tables
        consider(Fds(q, d.n(), std::vector<State>(guard.size(), 0)), 0);
        auto packing = cycle_packing(d);
        if (packing.value > 0) consider(cycle_packing_witness(d, q, packing.cycles), packing.value);
        if (is_complete(d) && d.n() >= 2)
            consider(clique_instability(d.n(), q), d.n() - (d.n() + q - 1) / q);
        if (d.symmetric() && d.max_in_degree() >= 1 && d.max_in_degree() <= 4 &&
            q == (1 << d.max_in_degree())) {
            auto c = undirected_degree_instability(d);
            consider(std::move(c.f), c.instability);
        }
        try {
            auto cs = chordless_cycles(d);
            if (!cs.truncated && !cs.cycles.empty()) {
                int chi = cycle_chromatic_index(d);
                if (q == (1 << chi)) {
                    auto c = chordless_cover_instability(d);
                    consider(std::move(c.f), c.instability);
                }
            }
        } catch (const CapExceeded&) {
        }
        if (budget.mode == SearchMode::Randomized) {
            FdsFamily fam(d, q);
            run_table_search(fam, budget, ub, search,
                             [&](const FdsFamily::Tables& t, long long best) {
                                 return static_cast<long long>(
                                     fam.min_dh(t, static_cast<int>(best)));
                             });
        }
        search.result.certified =
            search.best == ub ? Certified::BoundMatched : Certified::WitnessOnly;
    }
    search.result.value = search.best;
    return search.result;
}

ExtremalResult stability(const Digraph& d, int q, const SearchBudget& budget) {
    int tau = feedback_vertex_number(d).value;
    int ub = stability_upper_bound(d, q, tau);
    int n = d.n();

    MinMaxSearch search;
    if (budget.mode == SearchMode::Exhaustive) {
        FdsFamily fam(d, q);
        run_table_search(fam, budget, ub, search, [&](const FdsFamily::Tables& t, long long best) {
            // s(f) > best  <=>  max_x d_H < n - best
            return static_cast<long long>(n - fam.max_dh(t, n - static_cast<int>(best)));
        });
        search.result.certified =
            (budget.analytic_pruning && search.best >= ub) ? Certified::BoundMatched
                                                           : Certified::Exact;
    } else {
        auto consider = [&](Fds f, int value) {
            if (value > search.best) {
                search.best = value;
                search.result.witness = std::move(f);
            }
            ++search.result.candidates;
        };
        StateSpace guard(q, n);
        consider(Fds(q, n, std::vector<State>(guard.size(), 0)), 0);
        if (is_complete(d) && q <= n) consider(clique_packing_stability(n, q), n / q);
        if (q == 2) {
            auto matching = digon_matching(d);
            if (!matching.empty()) {
                std::vector<std::pair<int, Fds>> blocks;
                // winkler pair per matched digon, assembled over the right
                // coordinates via a direct table build
                StateSpace sp(2, n);
                std::vector<int> partner(n, -1), role(n, 0);
                for (auto [u, v] : matching) {
                    partner[u] = v;
                    partner[v] = u;
                    role[u] = 0;
                    role[v] = 1;
                }
                std::vector<State> table(sp.size());
                for (State x = 0; x < sp.size(); ++x) {
                    State y = 0;
                    for (int v = 0; v < n; ++v) {
                        int val = 0;
                        if (partner[v] >= 0)
                            val = (role[v] - sp.digit(x, partner[v]) + 2) % 2;
                        y = static_cast<State>(y * 2 + val);
                    }
                    table[x] = y;
                }
                Fds f(2, n, std::move(table));
                int value = metrics(f).s;
                if (value != static_cast<int>(matching.size()))
                    throw VerificationError("digon matching stability mismatch");
                consider(std::move(f), value);
            }
        }
        if (budget.mode == SearchMode::Randomized) {
            FdsFamily fam(d, q);
            run_table_search(fam, budget, ub, search,
                             [&](const FdsFamily::Tables& t, long long best) {
                                 return static_cast<long long>(
                                     n - fam.max_dh(t, n - static_cast<int>(best)));
                             });
        }
        search.result.certified =
            search.best == ub ? Certified::BoundMatched : Certified::WitnessOnly;
    }
    search.result.value = search.best;
    return search.result;
}

namespace {

bool is_prime_power(int q) {
    int p = 0;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return q >= 2;
    while (q % p == 0) q /= p;
    return q == 1;
}

// Enumerates / samples matrices supported on the arcs of d. The seeded
// candidates come first in randomized and construction modes: all entries
// -1 (the clique pattern) and all entries +1 (the shift pattern).
struct SupportedMatrices {
    const Digraph& d;
    const Field& f;
    std::vector<std::pair<int, int>> arcs;

    SupportedMatrices(const Digraph& d_, const Field& f_) : d(d_), f(f_), arcs(d_.arcs()) {}

    double log2_size() const { return static_cast<double>(arcs.size()) * std::log2(f.q()); }

    Mat build(const std::vector<int>& values) const {
        Mat m(d.n(), d.n());
        for (std::size_t i = 0; i < arcs.size(); ++i) m.at(arcs[i].first, arcs[i].second) = values[i];
        return m;
    }

    std::vector<Mat> seeds() const {
        std::vector<int> minus(arcs.size(), f.neg(1)), plus(arcs.size(), 1);
        std::vector<Mat> out{build(minus)};
        if (f.neg(1) != 1) out.push_back(build(plus));
        return out;
    }

    template <typename Visit>
    void exhaustive(Visit&& visit) const {
        if (log2_size() > 32.0)
            throw CapExceeded("supported-matrix space exceeds q^|E| = 2^32");
        std::vector<int> values(arcs.size(), 0);
        while (true) {
            if (!visit(build(values))) return;
            std::size_t pos = values.size();
            while (pos > 0) {
                --pos;
                if (++values[pos] < f.q()) break;
                values[pos] = 0;
                if (pos == 0) return;
            }
            if (values.empty()) return;
        }
    }

    template <typename Visit>
    void randomized(std::uint64_t trials, std::uint64_t seed, Visit&& visit) const {
        for (const Mat& m : seeds())
            if (!visit(m)) return;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> dist(0, f.q() - 1);
        std::vector<int> values(arcs.size());
        for (std::uint64_t t = 0; t < trials; ++t) {
            for (auto& v : values) v = dist(rng);
            if (!visit(build(values))) return;
        }
    }
};

}  // namespace

ExtremalResult linear_guessing(const Digraph& d, int q, const SearchBudget& budget) {
    if (!is_prime_power(q)) throw NotPrimePower("linear guessing needs a prime power q");
    const Field& field = Field::get(q);
    int n = d.n();
    int tau = feedback_vertex_number(d).value;

    SupportedMatrices space(d, field);
    ExtremalResult res;
    // Pure exhaustive runs never consult analytic bounds; the other modes
    // stop once the incumbent meets one (and report the match).
    const bool may_stop_at_bound =
        budget.mode != SearchMode::Exhaustive || budget.analytic_pruning;
    int best_rank = n + 1;
    auto visit = [&](const Mat& m) {
        ++res.candidates;
        Mat diff = m;
        for (int v = 0; v < n; ++v) diff.at(v, v) = field.sub(diff.at(v, v), 1);
        int rank = matrix_rank(field, diff);
        if (rank < best_rank) {
            best_rank = rank;
            res.affine_witness = AffineFds(field, m, std::vector<int>(n, 0), d);
        } else {
            ++res.prunes;
        }
        // rank can never drop below n - tau
        return !may_stop_at_bound || best_rank > n - tau;
    };

    switch (budget.mode) {
        case SearchMode::Exhaustive:
            space.exhaustive(visit);
            break;
        case SearchMode::Randomized:
            space.randomized(budget.trials, budget.seed, visit);
            break;
        case SearchMode::ConstructionOnly:
            for (const Mat& m : space.seeds())
                if (!visit(m)) break;
            break;
    }
    if (best_rank > n) {
        // no candidate at all (empty arc set still yields one: M = 0)
        Mat zero(n, n);
        visit(zero);
    }
    res.value = n - best_rank;
    if (budget.mode == SearchMode::Exhaustive && !budget.analytic_pruning)
        res.certified = Certified::Exact;
    else
        res.certified = res.value == tau ? Certified::BoundMatched : Certified::WitnessOnly;
    return res;
}

namespace {

// Common driver for the two coset-code searches (max covering radius /
// max n - remoteness over supported matrices).
template <typename Score>
ExtremalResult affine_code_search(const Digraph& d, int q, const SearchBudget& budget,
                                  int upper_bound, Score&& score) {
    if (!is_prime_power(q)) throw NotPrimePower("affine search needs a prime power q");
    const Field& field = Field::get(q);
    SupportedMatrices space(d, field);

    ExtremalResult res;
    const bool may_stop_at_bound =
        budget.mode != SearchMode::Exhaustive || budget.analytic_pruning;
    long long best = -1;
    auto visit = [&](const Mat& m) {
        ++res.candidates;
        auto [value, offset] = score(field, m);
        if (value > best) {
            best = value;
            res.affine_witness = AffineFds(field, m, offset, d);
        } else {
            ++res.prunes;
        }
        return !may_stop_at_bound || best < upper_bound;
    };

    switch (budget.mode) {
        case SearchMode::Exhaustive:
            space.exhaustive(visit);
            break;
        case SearchMode::Randomized:
            space.randomized(budget.trials, budget.seed, visit);
            break;
        case SearchMode::ConstructionOnly:
            for (const Mat& m : space.seeds())
                if (!visit(m)) break;
            break;
    }
    if (best < 0) {
        Mat zero(d.n(), d.n());
        visit(zero);
    }
    res.value = best;
    if (budget.mode == SearchMode::Exhaustive && !budget.analytic_pruning)
        res.certified = Certified::Exact;
    else
        res.certified = res.value == upper_bound ? Certified::BoundMatched : Certified::WitnessOnly;
    return res;
}

}  // namespace

ExtremalResult affine_instability(const Digraph& d, int q, const SearchBudget& budget) {
    int tau = feedback_vertex_number(d).value;
    int ub = instability_upper_bound(d, q, tau);
    return affine_code_search(d, q, budget, ub, [&](const Field& field, const Mat& m) {
        Mat diff = m;
        for (int v = 0; v < d.n(); ++v) diff.at(v, v) = field.sub(diff.at(v, v), 1);
        auto survey = covering_radius_linear(field, diff);
        return std::pair<long long, std::vector<int>>(survey.covering_radius,
                                                      survey.deep_coset_rep);
    });
}

ExtremalResult affine_stability(const Digraph& d, int q, const SearchBudget& budget) {
    int tau = feedback_vertex_number(d).value;
    int ub = stability_upper_bound(d, q, tau);
    return affine_code_search(d, q, budget, ub, [&](const Field& field, const Mat& m) {
        Mat diff = m;
        for (int v = 0; v < d.n(); ++v) diff.at(v, v) = field.sub(diff.at(v, v), 1);
        auto survey = remoteness_linear(field, diff);
        return std::pair<long long, std::vector<int>>(d.n() - survey.remoteness,
                                                      survey.best_coset_rep);
    });
}

namespace {

// Candidates for the minimized quantities: the best linear matrix (its code
// and cover values are algebraic), the completion of a maximum independent
// set, and the clique solution on complete graphs.
std::vector<Fds> dimension_candidates(const Digraph& d, int q, const SearchBudget& budget) {
    std::vector<Fds> out;
    if (is_prime_power(q)) {
        auto lin = linear_guessing(d, q, budget);
        if (lin.affine_witness) out.push_back(lin.affine_witness->tabulate());
    }
    if (is_complete(d)) out.push_back(clique_guessing(d.n(), q));
    try {
        auto g = GuessingGraph::build(d, q);
        auto alpha = independence_number(g);
        out.push_back(fds_from_independent_set(d, q, alpha.witness));
    } catch (const CapExceeded&) {
    }
    // constant map: always feasible (fix = {0}, code = the whole space)
    StateSpace sp(q, d.n());
    out.emplace_back(q, d.n(), std::vector<State>(sp.size(), 0));
    return out;
}

}  // namespace

ExtremalResult guessing_dimension_of_graph(const Digraph& d, int q, const SearchBudget& budget) {
    // lower bound: the public entropy count (chromatic number)
    std::uint64_t lb_count = public_entropy(d, q).count;

    ExtremalResult res;
    res.is_count = true;
    res.count.base = q;
    std::uint64_t best = 0;  // 0 = unset

    auto consider = [&](const Fds& f) {
        ++res.candidates;
        std::uint64_t size = guessing_code(f).words.size();
        if (best == 0 || size < best) {
            best = size;
            res.witness = f;
        }
    };

    if (budget.mode == SearchMode::Exhaustive) {
        FdsFamily fam(d, q);
        require_exhaustive_space(fam);
        auto tabs = fam.first();
        do {
            ++res.candidates;
            std::uint64_t size = fam.code_size(tabs);
            if (best == 0 || size < best) {
                best = size;
                res.witness = fam.materialize(tabs);
            }
            if (budget.analytic_pruning && best <= lb_count) break;
        } while (fam.next(tabs));
        res.certified = (budget.analytic_pruning && best <= lb_count) ? Certified::BoundMatched
                                                                      : Certified::Exact;
    } else {
        for (const Fds& f : dimension_candidates(d, q, budget)) consider(f);
        if (budget.mode == SearchMode::Randomized) {
            FdsFamily fam(d, q);
            auto tabs = fam.first();
            std::mt19937_64 rng(budget.seed);
            for (std::uint64_t t = 0; t < budget.trials && (best == 0 || best > lb_count); ++t) {
                fam.randomize(tabs, rng);
                consider(fam.materialize(tabs));
            }
        }
        res.certified = best == lb_count ? Certified::BoundMatched : Certified::WitnessOnly;
    }
    res.count.count = best;
    return res;
}

ExtremalResult coset_dimension_of_graph(const Digraph& d, int q, const SearchBudget& budget) {
    std::uint64_t lb_count = public_entropy(d, q).count;
    StateSpace sp(q, d.n(), cover_state_cap());

    ExtremalResult res;
    res.is_count = true;
    res.count.base = q;
    std::uint64_t best = 0;

    auto consider = [&](const Fds& f) {
        ++res.candidates;
        auto fix = fixed_points(f);
        if (fix.empty()) {
            ++res.prunes;
            return;
        }
        // counting bound: a cover needs at least q^n / |fix| translates
        std::uint64_t floor_need = (sp.size() + fix.size() - 1) / fix.size();
        if (best != 0 && floor_need >= best) {
            ++res.prunes;
            return;
        }
        std::uint64_t value = coset_dimension(f).count;
        if (best == 0 || value < best) {
            best = value;
            res.witness = f;
        }
    };

    if (budget.mode == SearchMode::Exhaustive) {
        FdsFamily fam(d, q);
        require_exhaustive_space(fam);
        auto tabs = fam.first();
        do {
            consider(fam.materialize(tabs));
            if (budget.analytic_pruning && best != 0 && best <= lb_count) break;
        } while (fam.next(tabs));
        res.certified = (budget.analytic_pruning && best <= lb_count) ? Certified::BoundMatched
                                                                      : Certified::Exact;
    } else {
        for (const Fds& f : dimension_candidates(d, q, budget)) consider(f);
        if (budget.mode == SearchMode::Randomized) {
            FdsFamily fam(d, q);
            auto tabs = fam.first();
            std::mt19937_64 rng(budget.seed);
            for (std::uint64_t t = 0; t < budget.trials && (best == 0 || best > lb_count); ++t) {
                fam.randomize(tabs, rng);
                consider(fam.materialize(tabs));
            }
        }
        res.certified = best == lb_count ? Certified::BoundMatched : Certified::WitnessOnly;
    }
    res.count.count = best;
    return res;
}

}  // namespace fdslab
