#include "fdslab/fds.hpp"

#include <algorithm>

#include "fdslab/solvers.hpp"

namespace fdslab {

namespace {

std::uint64_t checked_pow(int q, int n, std::uint64_t cap, const char* what) {
    std::uint64_t size = 1;
    for (int i = 0; i < n; ++i) {
        size *= static_cast<std::uint64_t>(q);
        if (size > cap)
            throw CapExceeded(std::string(what) + ": q^n exceeds cap " + std::to_string(cap));
    }
    return size;
}

}  // namespace

std::uint64_t& state_cap_ref() {
    static std::uint64_t cap = std::uint64_t(1) << 20;
    return cap;
}
std::uint64_t& graph_state_cap_ref() {
    static std::uint64_t cap = 4096;
    return cap;
}
std::uint64_t& cover_state_cap_ref() {
    static std::uint64_t cap = 4096;
    return cap;
}

std::uint64_t state_cap() { return state_cap_ref(); }
std::uint64_t graph_state_cap() { return graph_state_cap_ref(); }
std::uint64_t cover_state_cap() { return cover_state_cap_ref(); }

void set_state_caps(std::uint64_t states, std::uint64_t graph_states, std::uint64_t cover_states) {
    state_cap_ref() = states;
    graph_state_cap_ref() = graph_states;
    cover_state_cap_ref() = cover_states;
}

void set_all_state_caps(std::uint64_t cap) { set_state_caps(cap, cap, cap); }

StateSpace::StateSpace(int q, int n, std::uint64_t cap) : q_(q), n_(n) {
    if (q < 2) throw InputError("alphabet size must be at least 2");
    if (n < 1) throw InputError("dimension must be at least 1");
    size_ = checked_pow(q, n, cap, "state space");
    pow_.resize(n + 1);
    pow_[0] = 1;
    for (int i = 1; i <= n; ++i) pow_[i] = pow_[i - 1] * q;
}

Fds::Fds(int q, int n, std::vector<State> table, const Field* field)
    : space_(q, n), table_(std::move(table)), field_(field) {
    if (table_.size() != space_.size())
        throw InputError("FDS table has wrong size");
    for (State y : table_)
        if (y >= space_.size()) throw InputError("FDS table entry out of range");
    if (field_ && field_->q() != q) throw InputError("attached field order differs from q");
}

bool depends_on(const Fds& f, int v, int u) {
    const auto& sp = f.space();
    int q = f.q();
    // pairs differing only at u: iterate states with digit_u = 0 and compare
    // against every other value of that digit
    for (State x = 0; x < sp.size(); ++x) {
        if (sp.digit(x, u) != 0) continue;
        int base = sp.digit(f.apply(x), v);
        for (int d = 1; d < q; ++d) {
            State y = sp.with_digit(x, u, d);
            if (sp.digit(f.apply(y), v) != base) return true;
        }
    }
    return false;
}

Digraph interaction_graph(const Fds& f) {
    int n = f.n();
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;  // loopless convention
            if (depends_on(f, v, u)) arcs.emplace_back(u, v);
        }
    return Digraph(n, std::move(arcs));
}

bool respects(const Fds& f, const Digraph& d) {
    if (f.n() != d.n()) return false;
    for (int v = 0; v < f.n(); ++v)
        for (int u = 0; u < f.n(); ++u) {
            if (u != v && d.has_arc(u, v)) continue;
            if (depends_on(f, v, u)) return false;
        }
    return true;
}

std::vector<State> fixed_points(const Fds& f) {
    std::vector<State> fix;
    for (State x = 0; x < f.state_count(); ++x)
        if (f.apply(x) == x) fix.push_back(x);
    return fix;
}

Metrics metrics(const Fds& f) {
    const auto& sp = f.space();
    Metrics m;
    m.g.base = f.q();
    m.g.count = 0;
    int min_d = f.n(), max_d = 0;
    for (State x = 0; x < sp.size(); ++x) {
        int d = sp.hamming(x, f.apply(x));
        if (d == 0) ++m.g.count;
        min_d = std::min(min_d, d);
        max_d = std::max(max_d, d);
    }
    m.i = min_d;
    m.s = f.n() - max_d;
    return m;
}

Code guessing_code(const Fds& f) {
    Bitset seen(static_cast<int>(f.state_count()));
    for (State x = 0; x < f.state_count(); ++x) seen.set(static_cast<int>(f.diff(x)));
    Code c;
    c.q = f.q();
    c.n = f.n();
    seen.for_each([&](int w) { c.words.push_back(static_cast<State>(w)); });
    return c;
}

LogCount guessing_dimension(const Fds& f) {
    return LogCount{static_cast<std::uint64_t>(guessing_code(f).words.size()), f.q()};
}

LogCount coset_dimension(const Fds& f, std::uint64_t cap) {
    if (f.state_count() > cap)
        throw CapExceeded("translate cover capped at " + std::to_string(cap) + " states");
    auto fix = fixed_points(f);
    if (fix.empty()) throw Infeasible("empty fixed-point set has no translate cover");
    const auto& sp = f.space();
    int size = static_cast<int>(sp.size());
    // translate a covers x iff x + a is fixed
    std::vector<Bitset> translates(size, Bitset(size));
    for (int a = 0; a < size; ++a)
        for (State z : fix) translates[a].set(static_cast<int>(sp.sub(z, static_cast<State>(a))));
    auto cover = min_set_cover(size, translates);
    return LogCount{static_cast<std::uint64_t>(cover.size), f.q()};
}

AffineFds::AffineFds(const Field& field, Mat m, std::vector<int> offset,
                     std::optional<Digraph> support)
    : field_(&field), m_(std::move(m)), offset_(std::move(offset)), support_(std::move(support)) {
    if (m_.rows != m_.cols) throw InputError("affine matrix must be square");
    if (static_cast<int>(offset_.size()) != m_.rows)
        throw InputError("offset length differs from matrix dimension");
    for (int e : m_.a)
        if (e < 0 || e >= field_->q()) throw InputError("matrix entry outside the field");
    for (int e : offset_)
        if (e < 0 || e >= field_->q()) throw InputError("offset entry outside the field");
    if (support_) {
        if (support_->n() != m_.rows) throw InputError("support digraph has wrong vertex count");
        for (int u = 0; u < m_.rows; ++u)
            for (int v = 0; v < m_.cols; ++v) {
                if (m_.at(u, v) == 0) continue;
                if (u == v) throw InputError("diagonal entry conflicts with loopless support");
                if (!support_->has_arc(u, v))
                    throw InputError("matrix support outside the declared digraph");
            }
    }
}

Mat AffineFds::difference_matrix() const {
    Mat d = m_;
    for (int v = 0; v < d.rows; ++v) d.at(v, v) = field_->sub(d.at(v, v), 1);
    return d;
}

Fds AffineFds::tabulate(std::uint64_t cap) const {
    int nn = n(), q = field_->q();
    StateSpace sp(q, nn, cap);
    std::vector<State> table(sp.size());
    for (State x = 0; x < sp.size(); ++x) {
        State y = 0;
        for (int v = 0; v < nn; ++v) {
            int acc = offset_[v];
            for (int u = 0; u < nn; ++u)
                acc = field_->add(acc, field_->mul(sp.digit(x, u), m_.at(u, v)));
            y = static_cast<State>(y * q + acc);
        }
        table[x] = y;
    }
    return Fds(q, nn, std::move(table), field_);
}

std::vector<State> coset_words(const Field& f, const Mat& basis_echelon, int rank,
                               const std::vector<int>& offset) {
    int n = basis_echelon.cols, q = f.q();
    StateSpace sp(q, n);
    std::uint64_t combos = 1;
    for (int i = 0; i < rank; ++i) combos *= q;
    std::vector<State> words;
    words.reserve(combos);
    std::vector<int> coeff(rank, 0), word(offset);
    while (true) {
        words.push_back(sp.encode(word));
        // odometer over field coefficients; apply the scalar delta so the
        // word stays consistent in extension fields too
        int pos = rank - 1;
        while (pos >= 0) {
            int old_c = coeff[pos];
            coeff[pos] = (old_c + 1) % q;
            int delta = f.sub(coeff[pos], old_c);
            for (int c = 0; c < n; ++c)
                word[c] = f.add(word[c], f.mul(delta, basis_echelon.at(pos, c)));
            if (coeff[pos] != 0) break;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(words.begin(), words.end());
    return words;
}

AffineMetrics structural_metrics(const AffineFds& f) {
    const Field& fld = f.field();
    int n = f.n(), q = fld.q();
    Mat diff = f.difference_matrix();
    Mat echelon = diff;
    int rank = row_echelon(fld, echelon);

    AffineMetrics out;
    out.l.base = q;
    out.l.count = 1;
    for (int i = 0; i < rank; ++i) out.l.count *= q;

    // fix(f): x (M - I) = -y
    std::vector<int> neg_y(n);
    for (int v = 0; v < n; ++v) neg_y[v] = fld.neg(f.offset()[v]);
    std::vector<int> sol;
    out.g.base = q;
    if (solve_row_system(fld, diff, neg_y, sol)) {
        out.g.count = 1;
        for (int i = 0; i < n - rank; ++i) out.g.count *= q;
    } else {
        out.g.count = 0;
    }

    StateSpace sp(q, n);
    auto words = coset_words(fld, echelon, rank, f.offset());
    int min_w = n, max_w = 0;
    for (State w : words) {
        int wt = sp.weight(w);
        min_w = std::min(min_w, wt);
        max_w = std::max(max_w, wt);
    }
    out.i = min_w;
    out.s = n - max_w;
    return out;
}

}  // namespace fdslab
