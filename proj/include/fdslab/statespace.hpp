#pragma once

#include <cstdint>
#include <vector>

#include "fdslab/errors.hpp"

namespace fdslab {

// Rank of a state in [q]^n. Ranking is lexicographic with coordinate 0 most
// significant, fixed globally so serialized tables are portable.
using State = std::uint32_t;

// Process-wide state-count caps. The CLI's --cap-states / FDSLAB_CAP_STATES
// override all of them with one knob.
std::uint64_t state_cap();        // tabulated FDS size, default 2^20
std::uint64_t graph_state_cap();  // guessing graph vertices, default 4096
std::uint64_t cover_state_cap();  // translate-cover universe, default 4096
void set_state_caps(std::uint64_t states, std::uint64_t graph_states, std::uint64_t cover_states);
void set_all_state_caps(std::uint64_t cap);

class StateSpace {
public:
    StateSpace(int q, int n, std::uint64_t cap = state_cap());

    int q() const { return q_; }
    int n() const { return n_; }
    std::uint64_t size() const { return size_; }

    int digit(State x, int v) const { return static_cast<int>(x / pow_[n_ - 1 - v]) % q_; }

    State with_digit(State x, int v, int d) const {
        std::uint64_t w = pow_[n_ - 1 - v];
        return static_cast<State>(x + (d - digit(x, v)) * static_cast<std::int64_t>(w));
    }

    State encode(const std::vector<int>& digits) const {
        State x = 0;
        for (int v = 0; v < n_; ++v) x = static_cast<State>(x * q_ + digits[v]);
        return x;
    }

    std::vector<int> decode(State x) const {
        std::vector<int> digits(n_);
        for (int v = 0; v < n_; ++v) digits[v] = digit(x, v);
        return digits;
    }

    int hamming(State x, State y) const {
        if (x == y) return 0;
        int d = 0;
        for (int v = 0; v < n_; ++v) d += digit(x, v) != digit(y, v);
        return d;
    }

    int weight(State x) const {
        int w = 0;
        for (int v = 0; v < n_; ++v) w += digit(x, v) != 0;
        return w;
    }

    // Coordinatewise x - y in the group (Z mod q)^n.
    State sub(State x, State y) const {
        State r = 0;
        for (int v = 0; v < n_; ++v) r = static_cast<State>(r * q_ + (digit(x, v) - digit(y, v) + q_) % q_);
        return r;
    }

    State add(State x, State y) const {
        State r = 0;
        for (int v = 0; v < n_; ++v) r = static_cast<State>(r * q_ + (digit(x, v) + digit(y, v)) % q_);
        return r;
    }

    std::uint64_t power(int e) const { return pow_[e]; }

private:
    int q_, n_;
    std::uint64_t size_;
    std::vector<std::uint64_t> pow_;
};

}  // namespace fdslab
