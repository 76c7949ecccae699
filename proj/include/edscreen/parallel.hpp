#ifndef EDSCREEN_PARALLEL_HPP
#define EDSCREEN_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace edscreen {

inline unsigned resolve_threads(int threads) {
    if (threads > 0) return static_cast<unsigned>(threads);
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Run fn(i) for i in [0, count). Work is split into contiguous blocks, one
// per worker; every call with the same inputs touches the same disjoint output
// slots, so results do not depend on the thread count.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    unsigned nt = resolve_threads(threads);
    if (nt <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (nt > count) nt = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::exception_ptr err;
    std::mutex err_mu;
    std::size_t chunk = count / nt, extra = count % nt, start = 0;
    for (unsigned t = 0; t < nt; ++t) {
        std::size_t len = chunk + (t < extra ? 1 : 0);
        pool.emplace_back([&, start, len] {
            try {
                for (std::size_t i = start; i < start + len; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
        start += len;
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace edscreen

#endif
