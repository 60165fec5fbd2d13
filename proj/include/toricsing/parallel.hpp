#ifndef TORICSING_PARALLEL_HPP
#define TORICSING_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace toricsing {

// Apply f to 0..count-1 on `jobs` threads; results land in index order. The
// first exception wins and is rethrown on the caller's thread.
template <class T, class F>
std::vector<T> parallel_map(int count, int jobs, F f) {
    std::vector<T> out(count);
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!failed.exchange(true)) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs && t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load()) std::rethrow_exception(err);
    return out;
}

} // namespace toricsing

#endif
