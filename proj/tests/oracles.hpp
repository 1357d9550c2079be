#pragma once

// Independent brute-force oracles for test expectations. Deliberately slow
// and simple; they never share code with the implementation paths they
// check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "fdslab/digraph.hpp"
#include "fdslab/ffield.hpp"

namespace oracles {

// Rank as log_q of the size of the enumerated rowspace.
inline int rank_by_rowspace(const fdslab::Field& f, const fdslab::Mat& m) {
    std::set<std::vector<int>> span;
    std::vector<int> coeff(m.rows, 0);
    while (true) {
        std::vector<int> word(m.cols, 0);
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c)
                word[c] = f.add(word[c], f.mul(coeff[r], m.at(r, c)));
        span.insert(word);
        int pos = m.rows - 1;
        while (pos >= 0) {
            coeff[pos] = (coeff[pos] + 1) % f.q();
            if (coeff[pos] != 0) break;
            --pos;
        }
        if (pos < 0) break;
    }
    int rank = 0;
    std::size_t size = span.size();
    while (size > 1) {
        size /= f.q();
        ++rank;
    }
    return rank;
}

// Every simple directed cycle, as a sorted canonical vertex sequence
// starting at its minimum vertex. Usable up to n ~ 8.
inline std::vector<std::vector<int>> all_cycles(const fdslab::Digraph& d) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<bool> used(d.n(), false);
    auto dfs = [&](auto&& self, int start, int v) -> void {
        for (int w : d.out(v)) {
            if (w == start && path.size() >= 2) cycles.push_back(path);
            if (w > start && !used[w]) {
                used[w] = true;
                path.push_back(w);
                self(self, start, w);
                path.pop_back();
                used[w] = false;
            }
        }
    };
    for (int s = 0; s < d.n(); ++s) {
        path.assign(1, s);
        std::fill(used.begin(), used.end(), false);
        used[s] = true;
        dfs(dfs, s, s);
    }
    return cycles;
}

// Maximum number of vertex-disjoint cycles, over ALL cycles (not just
// chordless ones), by exponential recursion over the cycle list.
inline int max_disjoint_cycles(const fdslab::Digraph& d) {
    auto cycles = all_cycles(d);
    std::vector<std::uint64_t> masks;
    for (const auto& c : cycles) {
        std::uint64_t m = 0;
        for (int v : c) m |= std::uint64_t(1) << v;
        masks.push_back(m);
    }
    auto rec = [&](auto&& self, std::size_t idx, std::uint64_t used) -> int {
        if (idx == masks.size()) return 0;
        int best = self(self, idx + 1, used);
        if ((masks[idx] & used) == 0)
            best = std::max(best, 1 + self(self, idx + 1, used | masks[idx]));
        return best;
    };
    return rec(rec, 0, 0);
}

// Exact minimum feedback vertex set by trying all subsets in increasing
// size. Usable up to n ~ 10.
inline int min_fvs_bruteforce(const fdslab::Digraph& d) {
    int n = d.n();
    auto acyclic_without = [&](std::uint64_t removed) {
        // Kahn over remaining vertices
        std::vector<int> indeg(n, 0);
        for (auto [u, v] : d.arcs())
            if (!((removed >> u) & 1) && !((removed >> v) & 1)) ++indeg[v];
        std::vector<int> queue;
        int seen = 0, total = 0;
        for (int v = 0; v < n; ++v)
            if (!((removed >> v) & 1)) {
                ++total;
                if (indeg[v] == 0) queue.push_back(v);
            }
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            ++seen;
            for (int w : d.out(u))
                if (!((removed >> u) & 1) && !((removed >> w) & 1) && --indeg[w] == 0)
                    queue.push_back(w);
        }
        return seen == total;
    };
    for (int k = 0; k <= n; ++k)
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
            if (__builtin_popcountll(mask) == k && acyclic_without(mask)) return k;
    return n;
}

// Exact chromatic number of a small graph by trying k = 1, 2, ... with full
// assignment enumeration. Usable up to ~12 vertices.
inline int chromatic_bruteforce(const std::vector<fdslab::Bitset>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> colour(n, 0);
        while (true) {
            bool proper = true;
            for (int v = 0; v < n && proper; ++v)
                for (int u = v + 1; u < n && proper; ++u)
                    if (adj[v].test(u) && colour[v] == colour[u]) proper = false;
            if (proper) return k;
            int pos = n - 1;
            while (pos >= 0) {
                colour[pos] = (colour[pos] + 1) % k;
                if (colour[pos] != 0) break;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return n;
}

// Largest independent set of a small graph by subset enumeration (n <= 24).
inline int alpha_bruteforce(const std::vector<fdslab::Bitset>& adj) {
    int n = static_cast<int>(adj.size());
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (!((mask >> v) & 1)) continue;
            for (int u = v + 1; u < n && ok; ++u)
                if (((mask >> u) & 1) && adj[v].test(u)) ok = false;
        }
        if (ok) best = std::max(best, __builtin_popcountll(mask));
    }
    return best;
}

// Ball volume by direct enumeration over [q]^n (tiny instances only).
inline std::uint64_t ball_volume_bruteforce(int q, int n, int t) {
    std::uint64_t size = 1;
    for (int i = 0; i < n; ++i) size *= q;
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
        std::uint64_t v = x;
        int weight = 0;
        for (int i = 0; i < n; ++i) {
            weight += (v % q) != 0;
            v /= q;
        }
        if (weight <= t) ++count;
    }
    return count;
}

// GF(4) = GF(2)[x]/(x^2+x+1) product computed on explicit polynomials.
inline int gf4_mul_bruteforce(int a, int b) {
    // bits: value = a0 + 2*a1 for a0 + a1 x
    int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
    int c0 = a0 & b0;
    int c1 = (a0 & b1) ^ (a1 & b0);
    int c2 = a1 & b1;
    // x^2 = x + 1
    c0 ^= c2;
    c1 ^= c2;
    return c0 + 2 * c1;
}

}  // namespace oracles
