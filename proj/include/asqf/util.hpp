#ifndef ASQF_UTIL_HPP
#define ASQF_UTIL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace asqf {

/// Apply fn to 0..count-1 and collect the results in index order. The
/// result vector is identical whatever the worker count, so callers can
/// promise byte-identical output regardless of parallelism. The first
/// exception thrown by any worker stops the pool and is rethrown after
/// the join.
template <typename T, typename Fn>
std::vector<T> parallel_map(size_t count, unsigned threads, Fn fn) {
    std::vector<T> out(count);
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr error;
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!error) error = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    size_t w = size_t(threads) < count ? threads : count;
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (size_t t = 0; t < w; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

} // namespace asqf

#endif
