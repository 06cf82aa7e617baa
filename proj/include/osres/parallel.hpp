#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace osres {

// Worker cap: OS_RESONANCE_THREADS when set, hardware concurrency otherwise.
inline int thread_budget() {
    if (const char* env = std::getenv("OS_RESONANCE_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// fn(i) for i in [0, count), fanned out over at most thread_budget()
// threads. The first exception is rethrown on the calling thread.
template <class Fn>
void parallel_for(int count, Fn&& fn) {
    const int budget = std::min(thread_budget(), count);
    if (budget <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(budget);
    for (int t = 0; t < budget; ++t)
        pool.emplace_back([&] {
            try {
                for (int i = next++; i < count && !failed; i = next++) fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace osres
