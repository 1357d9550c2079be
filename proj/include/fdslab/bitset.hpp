#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace fdslab {

// Dynamic bitset sized at construction. The solvers lean on word-parallel
// intersection and iteration over set bits.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    void set_all() {
        for (int i = 0; i < n_; ++i) set(i);
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int intersection_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    // First set bit at position >= from, or -1.
    int find_next(int from) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (w) {
                int bit = (wi << 6) + std::countr_zero(w);
                return bit < n_ ? bit : -1;
            }
            if (++wi >= static_cast<int>(w_.size())) return -1;
            w = w_[wi];
        }
    }
    int find_first() const { return find_next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = find_first(); i >= 0; i = find_next(i + 1)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace fdslab
