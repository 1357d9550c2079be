#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fdslab/errors.hpp"

namespace fdslab {

// Minimal arbitrary-precision unsigned integer: just enough for exact ball
// volumes and integer-form inequality checks. Little-endian 32-bit limbs.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) {  // NOLINT: implicit by design
        while (v) {
            limbs_.push_back(static_cast<std::uint32_t>(v));
            v >>= 32;
        }
    }

    static BigUint pow(std::uint64_t base, unsigned exp) {
        BigUint r(1), b(base);
        while (exp) {
            if (exp & 1) r = r * b;
            b = b * b;
            exp >>= 1;
        }
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& o) {
        std::uint64_t carry = 0;
        std::size_t n = std::max(limbs_.size(), o.limbs_.size());
        limbs_.resize(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    // Requires *this >= o.
    BigUint& operator-=(const BigUint& o) {
        assert(!(*this < o));
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::int64_t d = std::int64_t(limbs_[i]) - borrow - (i < o.limbs_.size() ? o.limbs_[i] : 0);
            borrow = d < 0;
            limbs_[i] = static_cast<std::uint32_t>(d + (borrow << 32));
        }
        assert(borrow == 0);
        trim();
        return *this;
    }

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        if (a.is_zero() || b.is_zero()) return {};
        BigUint r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] + std::uint64_t(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    // Exact division by a small divisor; requires remainder 0.
    BigUint& divide_exact(std::uint32_t divisor) {
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
            rem = cur % divisor;
        }
        if (rem != 0) throw Error("BigUint::divide_exact: nonzero remainder");
        trim();
        return *this;
    }

    std::strong_ordering operator<=>(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size()) return limbs_.size() <=> o.limbs_.size();
        for (std::size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
        return std::strong_ordering::equal;
    }
    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }

    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const {
        if (!fits_u64()) throw Error("BigUint does not fit in 64 bits");
        std::uint64_t v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
        return v;
    }

    double to_double() const {
        double v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
        return v;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> tmp = limbs_;
        std::string out;
        while (!tmp.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<std::uint32_t>(cur / 1000000000);
                rem = cur % 1000000000;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            std::string chunk = std::to_string(rem);
            if (tmp.empty())
                out = chunk + out;
            else
                out = std::string(9 - chunk.size(), '0') + chunk + out;
        }
        return out;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;
};

}  // namespace fdslab
