#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ramsey {

inline unsigned default_workers() noexcept
{
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs f(i) for i in [0, count) on up to `workers` threads. Callers write results into
/// slot i, so aggregation order never depends on scheduling. The exception thrown for the
/// lowest index is rethrown after all workers finish.
template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& f)
{
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::size_t error_index = count;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    };
    const auto n_threads = std::min<std::size_t>(workers, count);
    std::vector<std::thread> threads;
    threads.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t)
        threads.emplace_back(work);
    for (auto& t : threads)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace ramsey
