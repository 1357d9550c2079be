#include "fdslab/solvers.hpp"

#include <algorithm>
#include <numeric>

#include "fdslab/errors.hpp"

namespace fdslab {

namespace {

// Upper bound on the independent set inside cand: greedily partition cand
// into cliques; an independent set takes at most one vertex per clique.
int clique_cover_bound(const std::vector<Bitset>& adj, Bitset cand) {
    int cliques = 0;
    while (cand.any()) {
        int v = cand.find_first();
        Bitset clique(static_cast<int>(adj.size()));
        clique.set(v);
        cand.reset(v);
        for (int u = cand.find_first(); u >= 0; u = cand.find_next(u + 1)) {
            // u joins if adjacent to every clique member so far
            if (adj[u].intersection_count(clique) == clique.count()) {
                clique.set(u);
                cand.reset(u);
            }
        }
        ++cliques;
    }
    return cliques;
}

struct MisSearch {
    const std::vector<Bitset>& adj;
    Bitset best_set;
    int best = 0;

    void run(Bitset cand, Bitset chosen, int chosen_count) {
        if (chosen_count + cand.count() <= best) return;
        if (cand.none()) {
            best = chosen_count;
            best_set = chosen;
            return;
        }
        if (chosen_count + clique_cover_bound(adj, cand) <= best) return;

        // branch on a vertex of maximum degree within cand
        int v = -1, best_deg = -1;
        for (int u = cand.find_first(); u >= 0; u = cand.find_next(u + 1)) {
            int deg = adj[u].intersection_count(cand);
            if (deg > best_deg) {
                best_deg = deg;
                v = u;
            }
        }
        Bitset with = cand;
        with.subtract(adj[v]);
        with.reset(v);
        Bitset chosen2 = chosen;
        chosen2.set(v);
        run(with, chosen2, chosen_count + 1);
        cand.reset(v);
        run(cand, chosen, chosen_count);
    }
};

}  // namespace

MisResult max_independent_set(const std::vector<Bitset>& adj, int pin) {
    int n = static_cast<int>(adj.size());
    MisResult res;
    if (n == 0) return res;
    MisSearch search{adj, Bitset(n), 0};
    Bitset cand(n);
    cand.set_all();
    Bitset chosen(n);
    int chosen_count = 0;
    if (pin >= 0) {
        chosen.set(pin);
        chosen_count = 1;
        cand.subtract(adj[pin]);
        cand.reset(pin);
    }
    search.run(cand, chosen, chosen_count);
    res.size = search.best;
    res.members = search.best_set.to_vector();
    return res;
}

bool colouring_is_proper(const std::vector<Bitset>& adj, const std::vector<int>& colouring) {
    int n = static_cast<int>(adj.size());
    if (static_cast<int>(colouring.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        if (colouring[v] < 0) return false;
        for (int u = adj[v].find_next(v + 1); u >= 0; u = adj[v].find_next(u + 1))
            if (colouring[u] == colouring[v]) return false;
    }
    return true;
}

namespace {

int colours_used(const std::vector<int>& colouring) {
    int k = 0;
    for (int c : colouring) k = std::max(k, c + 1);
    return k;
}

// Greedy DSATUR colouring, used for incumbents.
std::vector<int> dsatur_greedy(const std::vector<Bitset>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> colouring(n, -1);
    std::vector<Bitset> forbidden(n);  // colours seen in neighbourhood
    std::vector<int> sat(n, 0);
    for (int v = 0; v < n; ++v) forbidden[v] = Bitset(n + 1);
    for (int step = 0; step < n; ++step) {
        int v = -1, best_sat = -1, best_deg = -1;
        for (int u = 0; u < n; ++u) {
            if (colouring[u] >= 0) continue;
            int deg = adj[u].count();
            if (sat[u] > best_sat || (sat[u] == best_sat && deg > best_deg)) {
                best_sat = sat[u];
                best_deg = deg;
                v = u;
            }
        }
        int c = 0;
        while (forbidden[v].test(c)) ++c;
        colouring[v] = c;
        for (int u = adj[v].find_first(); u >= 0; u = adj[v].find_next(u + 1)) {
            if (!forbidden[u].test(c)) {
                forbidden[u].set(c);
                ++sat[u];
            }
        }
    }
    return colouring;
}

// Greedy clique for a chromatic lower bound.
int greedy_clique(const std::vector<Bitset>& adj) {
    int n = static_cast<int>(adj.size());
    int best = n ? 1 : 0;
    for (int start = 0; start < n; ++start) {
        Bitset cand = adj[start];
        Bitset clique(n);
        clique.set(start);
        int size = 1;
        while (cand.any()) {
            int v = -1, deg = -1;
            for (int u = cand.find_first(); u >= 0; u = cand.find_next(u + 1)) {
                int d = adj[u].intersection_count(cand);
                if (d > deg) {
                    deg = d;
                    v = u;
                }
            }
            clique.set(v);
            ++size;
            cand &= adj[v];
        }
        best = std::max(best, size);
    }
    return best;
}

// DSATUR branch and bound with dynamic vertex selection: always branch on
// an uncoloured vertex seeing the most distinct colours (ties by degree in
// the uncoloured subgraph).
struct ChiSearch {
    const std::vector<Bitset>& adj;
    int n;
    int lower;
    std::vector<int> colouring;           // -1 = uncoloured
    std::vector<Bitset> neighbour_cols;   // colours present in the neighbourhood
    std::vector<int> best_colouring;
    int best;

    void run(int coloured, int used) {
        if (used >= best) return;
        if (coloured == n) {
            best = used;
            best_colouring = colouring;
            return;
        }
        int v = -1, best_sat = -1, best_deg = -1;
        for (int u = 0; u < n; ++u) {
            if (colouring[u] >= 0) continue;
            int sat = neighbour_cols[u].count();
            int deg = adj[u].count();
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best_sat = sat;
                best_deg = deg;
                v = u;
            }
        }
        for (int c = 0; c < std::min(used + 1, best - 1); ++c) {
            if (neighbour_cols[v].test(c)) continue;
            colouring[v] = c;
            std::vector<int> touched;
            for (int u = adj[v].find_first(); u >= 0; u = adj[v].find_next(u + 1)) {
                if (colouring[u] < 0 && !neighbour_cols[u].test(c)) {
                    neighbour_cols[u].set(c);
                    touched.push_back(u);
                }
            }
            run(coloured + 1, std::max(used, c + 1));
            for (int u : touched) neighbour_cols[u].reset(c);
            colouring[v] = -1;
            if (best <= lower) return;  // cannot improve further
        }
    }
};

}  // namespace

ColouringResult exact_chromatic(const std::vector<Bitset>& adj, int lower_bound,
                                const std::vector<std::vector<int>>& seeds) {
    int n = static_cast<int>(adj.size());
    ColouringResult res;
    if (n == 0) return res;

    int lower = std::max({lower_bound, 1, greedy_clique(adj)});

    std::vector<int> incumbent = dsatur_greedy(adj);
    for (const auto& seed : seeds) {
        if (colouring_is_proper(adj, seed) && colours_used(seed) < colours_used(incumbent))
            incumbent = seed;
    }
    int ub = colours_used(incumbent);
    if (ub <= lower) {
        res.colours = ub;
        res.colouring = incumbent;
        return res;
    }

    ChiSearch search{adj,       n,
                     lower,     std::vector<int>(n, -1),
                     std::vector<Bitset>(n, Bitset(n + 1)),
                     incumbent, ub};
    search.run(0, 0);
    res.colours = search.best;
    res.colouring = search.best_colouring;
    if (!colouring_is_proper(adj, res.colouring))
        throw VerificationError("exact colouring produced an improper colouring");
    return res;
}

namespace {

struct CoverSearch {
    int universe;
    const std::vector<Bitset>& sets;
    int max_set_size;
    std::vector<int> chosen, best_chosen;
    int best;

    void run(const Bitset& covered, int covered_count) {
        if (covered_count == universe) {
            best = static_cast<int>(chosen.size());
            best_chosen = chosen;
            return;
        }
        int need = (universe - covered_count + max_set_size - 1) / max_set_size;
        if (static_cast<int>(chosen.size()) + need >= best) return;

        int x = -1;  // first uncovered element
        for (int i = 0; i < universe; ++i)
            if (!covered.test(i)) {
                x = i;
                break;
            }
        // try every set containing x, most new coverage first
        std::vector<std::pair<int, int>> cands;
        for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
            if (!sets[s].test(x)) continue;
            int gain = sets[s].count() - sets[s].intersection_count(covered);
            cands.emplace_back(-gain, s);
        }
        std::sort(cands.begin(), cands.end());
        for (auto [neg_gain, s] : cands) {
            Bitset next = covered;
            next |= sets[s];
            chosen.push_back(s);
            run(next, next.count());
            chosen.pop_back();
        }
    }
};

}  // namespace

CoverResult min_set_cover(int universe, const std::vector<Bitset>& sets) {
    CoverResult res;
    if (universe == 0) return res;
    Bitset all(universe);
    for (const auto& s : sets) all |= s;
    if (all.count() != universe) throw Infeasible("set cover: universe not coverable");

    int max_size = 1;
    for (const auto& s : sets) max_size = std::max(max_size, s.count());
    CoverSearch search{universe, sets, max_size, {}, {}, static_cast<int>(sets.size()) + 1};
    search.run(Bitset(universe), 0);
    res.size = search.best;
    res.chosen = search.best_chosen;
    return res;
}

}  // namespace fdslab
