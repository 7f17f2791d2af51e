#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace poly {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Splits [0, n) into contiguous chunks, one worker thread per chunk.
/// fn(worker, begin, end) must not touch shared mutable state; results are
/// merged by the caller so the outcome is independent of scheduling.
inline void parallel_chunks(std::size_t n, int jobs,
                            const std::function<void(int, std::size_t, std::size_t)>& fn) {
    jobs = resolve_jobs(jobs);
    if (n == 0) return;
    if (jobs == 1 || n < 2) {
        fn(0, 0, n);
        return;
    }
    const int workers = static_cast<int>(std::min<std::size_t>(jobs, n));
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        std::size_t begin = n * w / workers;
        std::size_t end = n * (w + 1) / workers;
        threads.emplace_back(fn, w, begin, end);
    }
    for (auto& t : threads) t.join();
}

}  // namespace poly
