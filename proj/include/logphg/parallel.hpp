#ifndef LOGPHG_PARALLEL_HPP
#define LOGPHG_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace logphg {

// Worker cap: explicit argument wins, then LOGPHG_THREADS, then 1.
inline int resolve_threads(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LOGPHG_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

// Index-parallel loop with results written by index: deterministic for any
// thread count.
inline void parallel_for(size_t count, int threads, const std::function<void(size_t)>& body) {
    threads = resolve_threads(threads);
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    size_t next = 0;
    std::mutex mu;
    auto worker = [&]() {
        for (;;) {
            size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= count) return;
                i = next++;
            }
            body(i);
        }
    };
    int n = std::min<int>(threads, static_cast<int>(count));
    pool.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace logphg

#endif
