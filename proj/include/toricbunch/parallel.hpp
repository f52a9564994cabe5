#ifndef TORICBUNCH_PARALLEL_HPP
#define TORICBUNCH_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace toric {

// Opt-in library parallelism.  All parallelized loops write to
// preallocated index slots, so results do not depend on the thread count.
inline std::atomic<std::size_t>& thread_count() {
    static std::atomic<std::size_t> n{1};
    return n;
}

inline void set_thread_count(std::size_t n) { thread_count().store(n == 0 ? 1 : n); }

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t threads = std::min<std::size_t>(thread_count().load(), n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    for (std::thread& th : pool) th.join();
}

}  // namespace toric

#endif
