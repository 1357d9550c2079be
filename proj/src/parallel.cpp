#include "fdslab/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace fdslab {

namespace {
std::atomic<int> g_threads{0};  // 0 = hardware default
}

int thread_count() {
    int t = g_threads.load();
    if (t > 0) return t;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void set_thread_count(int n) { g_threads.store(n); }

void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn) {
    int workers = std::min<std::int64_t>(thread_count(), n);
    if (workers <= 1 || n < 2048) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    std::int64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::int64_t begin = w * chunk, end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace fdslab
