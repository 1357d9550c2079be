#include "fdslab/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "fdslab/solvers.hpp"

namespace fdslab {

Digraph::Digraph(int n, std::vector<std::pair<int, int>> arcs, std::string name)
    : n_(n), arcs_(std::move(arcs)), name_(std::move(name)) {
    if (n_ < 1) throw InputError("digraph needs at least one vertex");
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    in_.resize(n_);
    out_.resize(n_);
    in_mask_.assign(n_, Bitset(n_));
    out_mask_.assign(n_, Bitset(n_));
    for (auto [u, v] : arcs_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InputError("arc endpoint out of range");
        if (u == v) throw LoopError("loop at vertex " + std::to_string(u));
        out_[u].push_back(v);
        in_[v].push_back(u);
        out_mask_[u].set(v);
        in_mask_[v].set(u);
    }
    for (auto& l : in_) std::sort(l.begin(), l.end());
    for (auto& l : out_) std::sort(l.begin(), l.end());
}

int Digraph::max_in_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, in_degree(v));
    return d;
}

int Digraph::max_out_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, out_degree(v));
    return d;
}

bool Digraph::symmetric() const {
    for (auto [u, v] : arcs_)
        if (!has_arc(v, u)) return false;
    return true;
}

Digraph Digraph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1;
    bool symmetrize = false;
    std::vector<std::pair<int, int>> arcs;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank
        if (first == "symmetrize") {
            symmetrize = true;
            continue;
        }
        if (n < 0) {
            int count;
            if (first != "n" || !(ls >> count) || count < 1)
                throw ParseError("expected 'n <count>'", lineno);
            n = count;
            continue;
        }
        int u, v;
        auto [p1, e1] = std::from_chars(first.data(), first.data() + first.size(), u);
        if (e1 != std::errc() || p1 != first.data() + first.size() || !(ls >> v))
            throw ParseError("expected 'u v'", lineno);
        std::string rest;
        if (ls >> rest) throw ParseError("trailing tokens after arc", lineno);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex out of range", lineno);
        if (u == v) throw LoopError("line " + std::to_string(lineno) + ": loop at vertex " +
                                    std::to_string(u));
        arcs.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("missing 'n <count>' header", lineno);
    if (symmetrize) {
        auto orig = arcs;
        for (auto [u, v] : orig) arcs.emplace_back(v, u);
    }
    return Digraph(n, std::move(arcs));
}

namespace {

int parse_int(const std::string& s, const std::string& spec) {
    int v = 0;
    auto [p, e] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (e != std::errc() || p != s.data() + s.size())
        throw BadSpec("bad number '" + s + "' in family spec '" + spec + "'");
    return v;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Digraph complete(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs), "K:" + std::to_string(n));
}

Digraph directed_cycle(int n) {
    if (n < 2) throw BadSpec("Cdir needs n >= 2");
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
    return Digraph(n, std::move(arcs), "Cdir:" + std::to_string(n));
}

Digraph undirected_cycle(int n) {
    if (n < 3) throw BadSpec("Cund needs n >= 3");
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < n; ++v) {
        arcs.emplace_back(v, (v + 1) % n);
        arcs.emplace_back((v + 1) % n, v);
    }
    return Digraph(n, std::move(arcs), "Cund:" + std::to_string(n));
}

Digraph paley(int p) {
    if (!is_prime(p)) throw BadSpec("paley:p needs p prime");
    if (p % 4 != 3) throw PaleyNotApplicable("paley:p needs p = 3 (mod 4)");
    std::set<int> squares;
    for (int x = 1; x < p; ++x) squares.insert((x * x) % p);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < p; ++u)
        for (int d : squares) arcs.emplace_back(u, (u + d) % p);
    return Digraph(p, std::move(arcs), "paley:" + std::to_string(p));
}

Digraph complete_bipartite(int m, int s) {
    if (m < 1 || s < 1) throw BadSpec("Kbip needs both sides nonempty");
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < s; ++v) {
            arcs.emplace_back(u, m + v);
            arcs.emplace_back(m + v, u);
        }
    return Digraph(m + s, std::move(arcs), "Kbip:" + std::to_string(m) + "," + std::to_string(s));
}

// Binary polynomial helpers for the simplex-code digraph (coefficient i of
// the polynomial is bit i).
std::uint64_t gf2_poly_divide_exact(std::uint64_t num, std::uint64_t den, int num_deg,
                                    int den_deg) {
    std::uint64_t quot = 0;
    for (int d = num_deg - den_deg; d >= 0; --d) {
        if (num >> (d + den_deg) & 1) {
            quot |= std::uint64_t(1) << d;
            num ^= den << d;
        }
    }
    if (num != 0) throw VerificationError("inexact binary polynomial division");
    return quot;
}

// Primitive polynomials of degree r over GF(2), bit i = coefficient of x^i.
std::uint64_t primitive_poly(int r) {
    static const std::uint64_t table[] = {
        0,    0,
        0b111,                // x^2+x+1
        0b1011,               // x^3+x+1
        0b10011,              // x^4+x+1
        0b100101,             // x^5+x^2+1
        0b1011011,            // x^6+x^4+x^3+x+1
        0b10000011,           // x^7+x+1
        0b100011101,          // x^8+x^4+x^3+x^2+1
    };
    if (r < 2 || r > 8) throw BadSpec("simplex:r supports 2 <= r <= 8");
    return table[r];
}

// Digraph of the length-(2^r - 1) cyclic simplex code: vertex v has
// in-neighbours v + j for every nonzero j in the support of the code's
// generator word g = (x^n - 1) / h, h the primitive polynomial.
Digraph simplex_digraph(int r) {
    std::uint64_t h = primitive_poly(r);
    int n = (1 << r) - 1;
    std::uint64_t xn1 = (std::uint64_t(1) << n) | 1;  // x^n + 1
    std::uint64_t g = gf2_poly_divide_exact(xn1, h, n, r);
    std::vector<std::pair<int, int>> arcs;
    for (int j = 1; j < n; ++j) {
        if (!(g >> j & 1)) continue;
        for (int v = 0; v < n; ++v) arcs.emplace_back((v + j) % n, v);
    }
    return Digraph(n, std::move(arcs), "simplex:" + std::to_string(r));
}

}  // namespace

Digraph Digraph::family(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw BadSpec("family spec '" + spec + "' has no ':'");
    std::string head = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (head == "K") return complete(parse_int(rest, spec));
    if (head == "Cdir") return directed_cycle(parse_int(rest, spec));
    if (head == "Cund") return undirected_cycle(parse_int(rest, spec));
    if (head == "paley") return paley(parse_int(rest, spec));
    if (head == "simplex") return simplex_digraph(parse_int(rest, spec));
    if (head == "Kbip") {
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw BadSpec("Kbip:m,s expected");
        return complete_bipartite(parse_int(rest.substr(0, comma), spec),
                                  parse_int(rest.substr(comma + 1), spec));
    }
    if (head == "power") {
        // power:Cdir:g^k
        auto caret = rest.rfind('^');
        if (caret == std::string::npos) throw BadSpec("power:Cdir:g^k expected");
        int k = parse_int(rest.substr(caret + 1), spec);
        if (k < 1) throw BadSpec("power exponent must be >= 1");
        std::string base_spec = rest.substr(0, caret);
        if (base_spec.rfind("Cdir:", 0) != 0) throw BadSpec("power base must be Cdir:g");
        Digraph base = directed_cycle(parse_int(base_spec.substr(5), spec));
        Digraph result = base;
        for (int i = 1; i < k; ++i) result = strong_product(result, base);
        return Digraph(result.n(), result.arcs(), "power:" + rest);
    }
    throw BadSpec("unknown family '" + head + "'");
}

Digraph strong_product(const Digraph& a, const Digraph& b) {
    int na = a.n(), nb = b.n();
    std::vector<std::pair<int, int>> arcs;
    auto id = [nb](int u1, int u2) { return u1 * nb + u2; };
    for (int u1 = 0; u1 < na; ++u1)
        for (int u2 = 0; u2 < nb; ++u2)
            for (int v1 = 0; v1 < na; ++v1)
                for (int v2 = 0; v2 < nb; ++v2) {
                    if (u1 == v1 && u2 == v2) continue;
                    bool e1 = a.has_arc(u1, v1), e2 = b.has_arc(u2, v2);
                    if ((u1 == v1 && e2) || (u2 == v2 && e1) || (e1 && e2))
                        arcs.emplace_back(id(u1, u2), id(v1, v2));
                }
    return Digraph(na * nb, std::move(arcs));
}

namespace {

// Shortest cycle through `start` among vertices not in `removed`;
// returns its length and (optionally) the cycle itself.
std::optional<int> shortest_cycle_through(const Digraph& d, int start, const Bitset& removed,
                                          std::vector<int>* cycle_out) {
    int n = d.n();
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue;
    dist[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : d.out(u)) {
            if (removed.test(v)) continue;
            if (v == start) {
                if (cycle_out) {
                    cycle_out->clear();
                    for (int w = u; w != -1; w = parent[w]) cycle_out->push_back(w);
                    std::reverse(cycle_out->begin(), cycle_out->end());
                }
                return dist[u] + 1;
            }
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> shortest_cycle(const Digraph& d, const Bitset& removed) {
    std::optional<std::vector<int>> best;
    std::vector<int> cycle;
    for (int s = 0; s < d.n(); ++s) {
        if (removed.test(s)) continue;
        auto len = shortest_cycle_through(d, s, removed, &cycle);
        if (len && (!best || cycle.size() < best->size())) best = cycle;
    }
    return best;
}

}  // namespace

std::optional<int> girth(const Digraph& d) {
    Bitset removed(d.n());
    auto cycle = shortest_cycle(d, removed);
    if (!cycle) return std::nullopt;
    return static_cast<int>(cycle->size());
}

CycleSet chordless_cycles(const Digraph& d, std::size_t cap) {
    CycleSet out;
    int n = d.n();
    std::vector<int> path;
    Bitset on_path(n);

    // Grow induced paths from each start vertex s (the cycle's minimum, so
    // each cycle is produced exactly once). A new vertex w may extend the
    // path only when its sole arc into/out of the path is the path arc
    // (v_k, w); it closes a cycle when its arcs to the path are exactly
    // (v_k, w) and (w, s).
    auto search = [&](auto&& self, int s) -> void {
        if (out.truncated) return;
        int last = path.back();
        for (int w : d.out(last)) {
            if (out.truncated) return;
            if (w <= s || on_path.test(w)) continue;
            int into_path = d.out_mask(w).intersection_count(on_path);
            int from_path = d.in_mask(w).intersection_count(on_path);
            bool closes = d.has_arc(w, s);
            // from_path counts (v_k, w) and any chords into w
            if (from_path != 1) continue;
            if (closes && into_path == 1) {
                if (out.cycles.size() >= cap) {
                    out.truncated = true;
                    return;
                }
                auto cycle = path;
                cycle.push_back(w);
                out.cycles.push_back(std::move(cycle));
                continue;  // extending past w would leave (w, s) as a chord
            }
            if (!closes && into_path == 0) {
                path.push_back(w);
                on_path.set(w);
                self(self, s);
                path.pop_back();
                on_path.reset(w);
            }
        }
    };

    for (int s = 0; s < n && !out.truncated; ++s) {
        path.assign(1, s);
        on_path.clear();
        on_path.set(s);
        search(search, s);
    }
    return out;
}

namespace {

// Intersection graph of the cycle list: adjacent when sharing a vertex.
std::vector<Bitset> cycle_conflicts(const Digraph& d, const std::vector<std::vector<int>>& cycles) {
    int m = static_cast<int>(cycles.size());
    std::vector<Bitset> vertex_sets(m, Bitset(d.n()));
    for (int i = 0; i < m; ++i)
        for (int v : cycles[i]) vertex_sets[i].set(v);
    std::vector<Bitset> adj(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (vertex_sets[i].intersects(vertex_sets[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
    return adj;
}

}  // namespace

CyclePacking cycle_packing(const Digraph& d, std::size_t cap) {
    auto cs = chordless_cycles(d, cap);
    if (cs.truncated) throw CapExceeded("chordless cycle enumeration truncated");
    CyclePacking res;
    if (cs.cycles.empty()) return res;
    auto adj = cycle_conflicts(d, cs.cycles);
    auto mis = max_independent_set(adj);
    res.value = mis.size;
    for (int i : mis.members) res.cycles.push_back(cs.cycles[i]);
    return res;
}

namespace {

struct FvsSearch {
    const Digraph& d;
    int best;
    Bitset best_removed;

    void run(Bitset& removed, int count) {
        if (count >= best) return;
        auto cycle = shortest_cycle(d, removed);
        if (!cycle) {
            best = count;
            best_removed = removed;
            return;
        }
        for (int v : *cycle) {
            removed.set(v);
            run(removed, count + 1);
            removed.reset(v);
        }
    }
};

}  // namespace

FeedbackVertexSet feedback_vertex_number(const Digraph& d) {
    if (d.n() > 64) throw CapExceeded("exact feedback vertex set capped at 64 vertices");
    FvsSearch search{d, d.n(), Bitset(d.n())};
    Bitset removed(d.n());
    search.run(removed, 0);
    FeedbackVertexSet res;
    res.value = search.best;
    res.vertices = search.best_removed.to_vector();
    return res;
}

int cycle_chromatic_index(const Digraph& d, std::size_t cap) {
    auto cs = chordless_cycles(d, cap);
    if (cs.truncated) throw CapExceeded("chordless cycle enumeration truncated");
    if (cs.cycles.empty()) return 0;
    auto adj = cycle_conflicts(d, cs.cycles);
    return exact_chromatic(adj).colours;
}

std::vector<int> topological_order(const Digraph& d, const std::vector<int>& removed) {
    int n = d.n();
    Bitset gone(n);
    for (int v : removed) gone.set(v);
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v) {
        if (gone.test(v)) continue;
        for (int u : d.in(v))
            if (!gone.test(u)) ++indeg[v];
    }
    std::vector<int> order;
    std::deque<int> queue;
    for (int v = 0; v < n; ++v)
        if (!gone.test(v) && indeg[v] == 0) queue.push_back(v);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (int v : d.out(u)) {
            if (gone.test(v)) continue;
            if (--indeg[v] == 0) queue.push_back(v);
        }
    }
    if (static_cast<int>(order.size()) != n - gone.count())
        throw NotAcyclic("remaining graph has a cycle");
    return order;
}

}  // namespace fdslab
