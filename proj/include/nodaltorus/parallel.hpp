#pragma once

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace nodaltorus {

// Worker count: NODALTORUS_THREADS if set (clamped to [1, 256]), otherwise
// the hardware concurrency. Parallelism never affects results here -- every
// parallel loop writes to a preallocated slot per index -- it only affects
// wall time.
inline unsigned thread_count() {
    if (const char* env = std::getenv("NODALTORUS_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1)
            return n > 256 ? 256u : static_cast<unsigned>(n);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, count) across workers. Indices are handed out
// atomically; outputs must be written to per-index storage. The first
// exception thrown by any worker is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned workers = std::min<std::size_t>(thread_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::mutex mu;
    std::size_t next = 0;
    std::exception_ptr error;
    auto body = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (error || next >= count)
                    return;
                i = next++;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error)
                    error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(body);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace nodaltorus
