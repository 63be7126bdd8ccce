#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <system_error>
#include <thread>
#include <vector>

#include "dse/error.hpp"

namespace dse {

/// Worker count when none is given: $SOLVER_THREADS if set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
unsigned default_thread_count();

inline constexpr const char* kThreadsEnvVar = "SOLVER_THREADS";

/// Runs body(i) for i in [0, n) across `threads` workers, each owning one
/// contiguous block of indices. body must only read shared state and write
/// slots owned by i; the result then does not depend on the thread count.
///
/// threads == 1 runs inline. The first exception (lowest block) is rethrown
/// after all workers join. Thread creation failure raises ExecutionError.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, n);
    std::vector<std::exception_ptr> errors(workers);
    auto run_block = [&](std::size_t w) {
        const std::size_t begin = n * w / workers;
        const std::size_t end = n * (w + 1) / workers;
        try {
            for (std::size_t i = begin; i < end; ++i) body(i);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        try {
            for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run_block, w);
        } catch (const std::system_error& e) {
            for (auto& t : pool) t.join();
            throw ExecutionError(std::string("cannot start worker thread: ") + e.what());
        }
        run_block(0);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace dse
