#include "hkit/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace hkit {

namespace {
int g_threads = 0; // 0 = not yet resolved

int resolve_default() {
    if (const char* env = std::getenv("HKIT_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}
} // namespace

int thread_count() {
    if (g_threads == 0) g_threads = resolve_default();
    return g_threads;
}

void set_thread_count(int n) { g_threads = std::max(1, n); }

void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t)>& body) {
    const std::int64_t total = end - begin;
    if (total <= 0) return;
    const int nt = std::min<std::int64_t>(thread_count(), total);
    if (nt <= 1) {
        for (std::int64_t i = begin; i < end; ++i) body(i);
        return;
    }
    std::atomic<std::int64_t> next(begin);
    const std::int64_t chunk = std::max<std::int64_t>(1, total / (8 * nt));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nt));
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                std::int64_t lo = next.fetch_add(chunk);
                if (lo >= end) return;
                std::int64_t hi = std::min(lo + chunk, end);
                for (std::int64_t i = lo; i < hi; ++i) body(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace hkit
