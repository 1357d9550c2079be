#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "fdslab/digraph.hpp"
#include "fdslab/ffield.hpp"
#include "fdslab/logcount.hpp"
#include "fdslab/statespace.hpp"

namespace fdslab {

// A finite dynamical system f : [q]^n -> [q]^n stored as an explicit table
// over rank-encoded states. Immutable after construction. The optional field
// switches f(x) - x from (Z mod q)^n subtraction to coordinatewise field
// subtraction; for prime q the two coincide.
class Fds {
public:
    Fds(int q, int n, std::vector<State> table, const Field* field = nullptr);

    int q() const { return space_.q(); }
    int n() const { return space_.n(); }
    const StateSpace& space() const { return space_; }
    std::uint64_t state_count() const { return space_.size(); }
    State apply(State x) const { return table_[x]; }
    const std::vector<State>& table() const { return table_; }
    const Field* field() const { return field_; }

    State diff(State x) const {  // f(x) - x
        if (!field_) return space_.sub(table_[x], x);
        State r = 0;
        for (int v = 0; v < n(); ++v)
            r = static_cast<State>(r * q() + field_->sub(space_.digit(table_[x], v), space_.digit(x, v)));
        return r;
    }

private:
    StateSpace space_;
    std::vector<State> table_;
    const Field* field_;
};

// Loopless interaction graph: arc (u, v) for u != v when f_v takes two
// different values on some pair differing only at u. Self-dependencies are
// outside the digraph type and reported by depends_on instead.
Digraph interaction_graph(const Fds& f);

// Whether f_v depends essentially on coordinate u (u == v allowed).
bool depends_on(const Fds& f, int v, int u);

// f_v depends only on the in-neighbourhood of v in d, for every v.
bool respects(const Fds& f, const Digraph& d);

std::vector<State> fixed_points(const Fds& f);

struct Metrics {
    LogCount g;  // |fix(f)| as a log_q count
    int s = 0;   // min_x (n - d_H(x, f(x)))
    int i = 0;   // min_x d_H(x, f(x))
};
Metrics metrics(const Fds& f);

struct Code {
    int q = 0, n = 0;
    std::vector<State> words;  // sorted, distinct
};

Code guessing_code(const Fds& f);
LogCount guessing_dimension(const Fds& f);

// Exact minimum number of translates of fix(f) covering [q]^n.
// Throws Infeasible when fix(f) is empty.
LogCount coset_dimension(const Fds& f, std::uint64_t cap = cover_state_cap());

// f(x) = x M + y over GF(q), x a row vector. When a support digraph is
// attached, M must vanish on the diagonal and off-diagonal support must lie
// inside the arc set.
class AffineFds {
public:
    AffineFds(const Field& field, Mat m, std::vector<int> offset,
              std::optional<Digraph> support = std::nullopt);

    const Field& field() const { return *field_; }
    int n() const { return m_.rows; }
    const Mat& matrix() const { return m_; }
    const std::vector<int>& offset() const { return offset_; }
    const std::optional<Digraph>& support() const { return support_; }

    // M - I, the matrix of x -> f(x) - x.
    Mat difference_matrix() const;

    Fds tabulate(std::uint64_t cap = state_cap()) const;

private:
    const Field* field_;
    Mat m_;
    std::vector<int> offset_;
    std::optional<Digraph> support_;
};

struct AffineMetrics {
    LogCount g;
    int s = 0, i = 0;
    LogCount l;
};

// Metrics from the matrix alone: C_f is the coset rowspace(M - I) + y, so
// l = rank(M - I), i / s are the coset's min / n - max weight, and the fixed
// points are the solutions of x (M - I) = -y.
AffineMetrics structural_metrics(const AffineFds& f);

// Full 2^r-ish enumeration of the coset rowspace(basis) + offset; helper
// shared with the coding module.
std::vector<State> coset_words(const Field& f, const Mat& basis_echelon, int rank,
                               const std::vector<int>& offset);

}  // namespace fdslab
