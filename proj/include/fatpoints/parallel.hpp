#pragma once

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace fatpoints {

/// Worker count: FATPOINTS_JOBS env var if set, else hardware concurrency.
inline int default_jobs() {
    if (const char* env = std::getenv("FATPOINTS_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

/// Evaluate fn(0..count-1) on a worker pool and return results in index
/// order. Output is identical for every jobs value.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, int jobs, F&& fn) {
    std::vector<T> out(count);
    if (count == 0) return out;
    if (jobs < 1) jobs = 1;
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

} // namespace fatpoints
