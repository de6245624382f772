#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace sccc {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs body(i) for i in [0, n) on up to n_threads workers. Each index owns
// its output slot, so results do not depend on scheduling order.
inline void parallel_for(int n, int n_threads, const std::function<void(int)>& body) {
    n_threads = std::min(resolve_threads(n_threads), n);
    if (n_threads <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(n_threads));
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < n_threads; ++t) {
        workers.emplace_back([&]() {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace sccc
