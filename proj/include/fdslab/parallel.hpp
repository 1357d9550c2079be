#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace fdslab {

// Process-wide worker count, settable from the CLI (--threads).
int thread_count();
void set_thread_count(int n);

// Runs fn(begin, end) on disjoint chunks of [0, n). Chunking is a pure
// partition, so any fn that writes only to its own indices is deterministic
// regardless of the worker count.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace fdslab
