#include "fdslab/coding.hpp"

#include <algorithm>
#include <cmath>

namespace fdslab {

BigUint ball_volume(int q, int n, int t) {
    if (t < 0) return BigUint(0);
    t = std::min(t, n);
    BigUint total(0);
    BigUint binom(1);  // C(n, d)
    BigUint qm1_pow(1);
    for (int d = 0; d <= t; ++d) {
        total += binom * qm1_pow;
        // C(n, d+1) = C(n, d) * (n - d) / (d + 1), exact at every step
        if (d < n) {
            binom = binom * BigUint(n - d);
            binom.divide_exact(d + 1);
        }
        qm1_pow = qm1_pow * BigUint(q - 1);
    }
    return total;
}

int covering_radius(const Code& c, std::uint64_t cap) {
    if (c.words.empty()) throw InputError("covering radius of an empty code");
    StateSpace sp(c.q, c.n, cap);
    int cr = 0;
    for (State y = 0; y < sp.size(); ++y) {
        int best = c.n + 1;
        for (State w : c.words) {
            best = std::min(best, sp.hamming(w, y));
            if (best == 0) break;
        }
        cr = std::max(cr, best);
    }
    return cr;
}

int remoteness(const Code& c, std::uint64_t cap) {
    if (c.words.empty()) throw InputError("remoteness of an empty code");
    StateSpace sp(c.q, c.n, cap);
    int rem = c.n + 1;
    for (State y = 0; y < sp.size(); ++y) {
        int worst = 0;
        for (State w : c.words) worst = std::max(worst, sp.hamming(w, y));
        rem = std::min(rem, worst);
    }
    return rem;
}

namespace {

// Canonical coset label: eliminate the pivot coordinates of `word` against
// the echelon basis; the residue on the free coordinates identifies the
// coset.
struct SyndromeMap {
    const Field& f;
    Mat basis;  // echelon, `rank` nonzero rows
    int rank, n;
    std::vector<int> pivot_of_row;
    std::vector<int> free_cols;

    SyndromeMap(const Field& f_, const Mat& echelon, int rank_)
        : f(f_), basis(echelon), rank(rank_), n(echelon.cols) {
        std::vector<bool> is_pivot(n, false);
        for (int r = 0; r < rank; ++r) {
            int p = 0;
            while (p < n && basis.at(r, p) == 0) ++p;
            pivot_of_row.push_back(p);
            is_pivot[p] = true;
        }
        for (int c = 0; c < n; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }

    std::uint64_t label(const std::vector<int>& word) const {
        std::vector<int> w = word;
        for (int r = 0; r < rank; ++r) {
            int c = w[pivot_of_row[r]];
            if (c == 0) continue;
            for (int j = pivot_of_row[r]; j < n; ++j)
                w[j] = f.sub(w[j], f.mul(c, basis.at(r, j)));
        }
        std::uint64_t l = 0;
        for (int c : free_cols) l = l * f.q() + w[c];
        return l;
    }
};

// Visits words of [q]^n of the given weight in lexicographic order of
// (support, values); returns false from the callback to stop.
template <typename F>
bool for_each_word_of_weight(int q, int n, int weight, F&& cb) {
    std::vector<int> support(weight);
    std::vector<int> word(n, 0);
    auto rec = [&](auto&& self, int idx, int start) -> bool {
        if (idx == weight) {
            // odometer over nonzero values at the chosen support
            std::vector<int> vals(weight, 1);
            for (int i = 0; i < weight; ++i) word[support[i]] = 1;
            while (true) {
                if (!cb(word)) return false;
                int pos = weight - 1;
                while (pos >= 0) {
                    vals[pos] = vals[pos] + 1;
                    if (vals[pos] == q) {
                        vals[pos] = 1;
                        word[support[pos]] = 1;
                        --pos;
                    } else {
                        word[support[pos]] = vals[pos];
                        break;
                    }
                }
                if (pos < 0) break;
            }
            for (int i = 0; i < weight; ++i) word[support[i]] = 0;
            return true;
        }
        for (int c = start; c < n - (weight - idx - 1); ++c) {
            support[idx] = c;
            if (!self(self, idx + 1, c + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0, 0);
}

std::uint64_t checked_coset_count(const Field& f, int n, int rank, std::uint64_t cap) {
    std::uint64_t cosets = 1;
    for (int i = 0; i < n - rank; ++i) {
        cosets *= static_cast<std::uint64_t>(f.q());
        if (cosets > cap) throw CapExceeded("coset enumeration: q^(n-k) exceeds cap");
    }
    return cosets;
}

}  // namespace

CosetSurvey covering_radius_linear(const Field& f, const Mat& gen, std::uint64_t cap) {
    Mat echelon = gen;
    int rank = row_echelon(f, echelon);
    int n = gen.cols;
    std::uint64_t cosets = checked_coset_count(f, n, rank, cap);

    SyndromeMap syn(f, echelon, rank);
    std::vector<bool> seen(cosets, false);
    std::uint64_t found = 0;
    CosetSurvey out;
    out.rank = rank;
    for (int w = 0; w <= n && found < cosets; ++w) {
        for_each_word_of_weight(f.q(), n, w, [&](const std::vector<int>& word) {
            std::uint64_t l = syn.label(word);
            if (!seen[l]) {
                seen[l] = true;
                ++found;
                out.covering_radius = w;
                out.deep_coset_rep = word;
            }
            return found < cosets;
        });
    }
    if (found < cosets) throw VerificationError("coset enumeration missed a coset");
    return out;
}

RemotenessSurvey remoteness_linear(const Field& f, const Mat& gen, std::uint64_t cap) {
    Mat echelon = gen;
    int rank = row_echelon(f, echelon);
    int n = gen.cols;
    StateSpace guard(f.q(), n, cap);  // whole-space scan bound
    std::uint64_t cosets = checked_coset_count(f, n, rank, guard.size());

    SyndromeMap syn(f, echelon, rank);
    std::vector<bool> seen(cosets, false);
    std::uint64_t found = 0;
    RemotenessSurvey out;
    out.rank = rank;
    for (int w = n; w >= 0 && found < cosets; --w) {
        for_each_word_of_weight(f.q(), n, w, [&](const std::vector<int>& word) {
            std::uint64_t l = syn.label(word);
            if (!seen[l]) {
                seen[l] = true;
                ++found;
                out.remoteness = w;
                out.best_coset_rep = word;
            }
            return found < cosets;
        });
    }
    if (found < cosets) throw VerificationError("coset enumeration missed a coset");
    return out;
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw InputError("entropy argument outside [0, 1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

namespace {

struct Battery {
    const Quantities& qs;
    std::vector<BoundReport> reports;

    void row(const std::string& name, const BigUint& lhs, const std::string& rel,
             const BigUint& rhs) {
        bool holds = rel == "<=" ? !(rhs < lhs) : !(lhs < rhs);
        reports.push_back({name, lhs.to_string(), rhs.to_string(), holds, qs.instance});
    }
    void row_int(const std::string& name, std::int64_t lhs, const std::string& rel,
                 std::int64_t rhs) {
        bool holds = rel == "<=" ? lhs <= rhs : lhs >= rhs;
        reports.push_back({name, std::to_string(lhs), std::to_string(rhs), holds, qs.instance});
    }
};

}  // namespace

std::vector<BoundReport> check_bounds(const Quantities& qs) {
    if (qs.n <= 0 || qs.q < 2) throw MissingQuantity("instance needs n and q");
    Battery b{qs, {}};
    const int n = qs.n, q = qs.q;
    const BigUint qn = BigUint::pow(q, n);

    if (qs.nu && qs.i) b.row_int("nu <= i", *qs.nu, "<=", *qs.i);
    if (qs.i && qs.tau) b.row_int("i <= tau", *qs.i, "<=", *qs.tau);
    if (qs.nu && qs.i_aff) b.row_int("nu <= i_aff", *qs.nu, "<=", *qs.i_aff);
    if (qs.i_aff && qs.tau) b.row_int("i_aff <= tau", *qs.i_aff, "<=", *qs.tau);

    if (qs.alpha && qs.nu) b.row("q^nu <= alpha", BigUint::pow(q, *qs.nu), "<=", *qs.alpha);
    if (qs.alpha && qs.tau) b.row("alpha <= q^tau", *qs.alpha, "<=", BigUint::pow(q, *qs.tau));

    if (qs.alpha && qs.chi)
        b.row("alpha * chi >= q^n", BigUint(*qs.alpha) * BigUint(*qs.chi), ">=", qn);
    if (qs.chi && qs.tau)
        b.row("chi >= q^(n-tau)", *qs.chi, ">=", BigUint::pow(q, n - *qs.tau));
    if (qs.l_count && qs.chi) b.row("l >= chi", *qs.l_count, ">=", *qs.chi);
    if (qs.c_count && qs.chi) b.row("c >= chi", *qs.c_count, ">=", *qs.chi);

    if (qs.s && qs.i) b.row_int("s + i <= n", *qs.s + *qs.i, "<=", n);
    if (qs.s_aff && qs.i_aff) b.row_int("s_aff + i_aff <= n", *qs.s_aff + *qs.i_aff, "<=", n);

    if (qs.alpha && qs.tau && qs.i) {
        BigUint qt = BigUint::pow(q, *qs.tau);
        BigUint hole = qt - ball_volume(q, *qs.tau, *qs.i - 1);
        b.row("alpha * (q^tau - V(q,tau,i-1)) >= q^tau", BigUint(*qs.alpha) * hole, ">=", qt);
    }
    if (qs.alpha && qs.tau && qs.s) {
        BigUint qt = BigUint::pow(q, *qs.tau);
        b.row("alpha * V(q,tau,tau-s) >= q^tau",
              BigUint(*qs.alpha) * ball_volume(q, *qs.tau, *qs.tau - *qs.s), ">=", qt);
    }

    if (qs.s && qs.tau && *qs.tau >= 1) {
        // p = floor((q-1)^(1/tau)): largest p with p^tau <= q-1
        int p = 1;
        while (true) {
            std::int64_t pw = 1;
            bool over = false;
            for (int i = 0; i < *qs.tau; ++i) {
                pw *= (p + 1);
                if (pw > q - 1) {
                    over = true;
                    break;
                }
            }
            if (over) break;
            ++p;
        }
        b.row_int("s * floor((q-1)^(1/tau)) <= tau", std::int64_t(*qs.s) * p, "<=", *qs.tau);
        // Q(m) = 2 + sum_{a=1}^m a^a: Q(1)=3, Q(2)=7, Q(3)=34
        static constexpr int kQ[] = {3, 7, 34};
        for (int m = 1; m <= 3; ++m)
            if (q == kQ[m - 1])
                b.row_int("s <= tau - m at q=Q(m)", *qs.s, "<=", *qs.tau - m);
    }

    if (qs.l_count && qs.i)
        b.row("V(q,n,i) * l >= q^n", ball_volume(q, n, *qs.i) * BigUint(*qs.l_count), ">=", qn);
    if (qs.l_count && qs.s)
        b.row("(q^n - V(q,n,n-s-1)) * l >= q^n",
              (qn - ball_volume(q, n, n - *qs.s - 1)) * BigUint(*qs.l_count), ">=", qn);
    if (qs.l_aff_count && qs.i_aff)
        b.row("V(q,n,i_aff) * l_aff >= q^n",
              ball_volume(q, n, *qs.i_aff) * BigUint(*qs.l_aff_count), ">=", qn);
    if (qs.l_aff_count && qs.s_aff)
        b.row("(q^n - V(q,n,n-s_aff-1)) * l_aff >= q^n",
              (qn - ball_volume(q, n, n - *qs.s_aff - 1)) * BigUint(*qs.l_aff_count), ">=", qn);

    if (qs.alpha && qs.c_count) {
        b.row("alpha * c >= q^n", BigUint(*qs.alpha) * BigUint(*qs.c_count), ">=", qn);
        // c <= q^n (1 + q ln n) / alpha, checked in floating point with
        // 1e-9 slack on the logarithmic side
        double lhs = static_cast<double>(*qs.c_count);
        double rhs = qn.to_double() * (1.0 + q * std::log(static_cast<double>(n))) /
                     static_cast<double>(*qs.alpha);
        bool holds = lhs <= rhs * (1.0 + 1e-9) + 1e-9;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", rhs);
        b.reports.push_back({"c <= q^n (1 + q ln n) / alpha", std::to_string(*qs.c_count), buf,
                             holds, qs.instance});
    }

    return b.reports;
}

std::vector<BoundReport> check_code_bounds(int q, int n, std::uint64_t size, int cr, int rem,
                                           const std::string& instance) {
    std::vector<BoundReport> out;
    BigUint qn = BigUint::pow(q, n);
    BigUint lhs1 = BigUint(size) * ball_volume(q, n, cr);
    out.push_back({"|C| * V(q,n,cr) >= q^n", lhs1.to_string(), qn.to_string(), !(lhs1 < qn),
                   instance});
    BigUint lhs2 = BigUint(size) * (qn - ball_volume(q, n, rem - 1));
    out.push_back({"|C| * (q^n - V(q,n,rem-1)) >= q^n", lhs2.to_string(), qn.to_string(),
                   !(lhs2 < qn), instance});
    return out;
}

}  // namespace fdslab
