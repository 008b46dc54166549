#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cyclemod {

/// 0 means one worker per hardware thread.
inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0)
        return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs work(i) for i in [0, chunks) on up to `jobs` threads and returns the
/// results indexed by chunk, so callers that merge in index order get the
/// same answer for any worker count. The first exception thrown by a worker
/// is rethrown after all threads join.
template <class Result, class Work>
std::vector<Result> run_chunks(std::size_t chunks, unsigned jobs, Work&& work) {
    std::vector<Result> results(chunks);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), chunks));
    if (workers <= 1) {
        for (std::size_t i = 0; i < chunks; ++i)
            results[i] = work(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto loop = [&] {
        while (!failed.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= chunks)
                return;
            try {
                results[i] = work(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(loop);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return results;
}

} // namespace cyclemod
