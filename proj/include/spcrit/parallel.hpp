#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace spcrit {

/// Worker count from SPCRIT_JOBS, else 1.
inline int default_jobs()
{
    if (const char* env = std::getenv("SPCRIT_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0)
            return j;
    }
    return 1;
}

/// Runs body(i) for i in [0, count) on \p jobs threads, striped by index.
/// Callers write results into per-index slots, so output order never
/// depends on the worker count. The first exception is rethrown.
template <class Body>
void parallel_for(std::size_t count, int jobs, Body&& body)
{
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex guard;
    std::vector<std::thread> workers;
    const auto stride = static_cast<std::size_t>(jobs);
    for (std::size_t w = 0; w < stride; ++w)
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += stride)
                    body(i);
            } catch (...) {
                std::lock_guard lock(guard);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    for (auto& t : workers)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace spcrit
