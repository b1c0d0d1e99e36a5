#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gammalgo {

inline unsigned resolve_threads(unsigned requested)
{
    if (requested != 0) {
        return requested;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Applies fn(i) for every i in [0, total), chunked over worker threads.
/// fn must only touch disjoint state per index; the first exception thrown
/// by any worker is re-thrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t total, unsigned threads, Fn &&fn)
{
    threads = resolve_threads(threads);
    if (threads <= 1 || total < 2 * threads) {
        for (std::size_t i = 0; i < total; ++i) {
            fn(i);
        }
        return;
    }
    std::size_t workers = threads < total ? threads : total;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = total * w / workers;
        std::size_t end = total * (w + 1) / workers;
        pool.emplace_back([&, begin, end, w]() {
            try {
                for (std::size_t i = begin; i < end; ++i) {
                    fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace gammalgo
