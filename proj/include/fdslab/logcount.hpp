#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace fdslab {

// Exact (count, base) pair representing log_base(count). All log_q
// quantities are stored this way; the floating-point value exists only
// for display.
struct LogCount {
    std::uint64_t count = 0;
    int base = 2;

    double log() const {
        if (count == 0) return -std::numeric_limits<double>::infinity();
        return std::log(static_cast<double>(count)) / std::log(static_cast<double>(base));
    }

    bool operator==(const LogCount&) const = default;
};

}  // namespace fdslab
