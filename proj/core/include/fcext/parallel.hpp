#ifndef FCEXT_PARALLEL_HPP
#define FCEXT_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace fcext {

/* Run fn(0..n-1) on up to `threads` workers.  Callers must write results
 * into index-addressed slots so the outcome is independent of scheduling. */
inline void parallel_for(int n, int threads, const std::function<void(int)>& fn)
{
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    int workers = std::min(threads, n);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                fn(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

}  // namespace fcext

#endif
