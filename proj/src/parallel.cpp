#include "metpoly/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace metpoly {

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_count(int threads) { g_threads.store(threads < 0 ? 0 : threads); }

int thread_count() {
    int t = g_threads.load();
    if (t == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        t = hw == 0 ? 1 : static_cast<int>(hw);
    }
    return t;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int workers = thread_count();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        constexpr std::size_t chunk = 16;
        try {
            for (;;) {
                const std::size_t begin = next.fetch_add(chunk);
                if (begin >= count) return;
                const std::size_t end = std::min(begin + chunk, count);
                for (std::size_t i = begin; i < end; ++i) fn(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    pool.reserve(nthreads - 1);
    for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace metpoly
