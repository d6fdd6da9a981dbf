// Minimal work-sharing loop. Callers pre-assign seeds and output slots per
// index, so results are identical regardless of scheduling.
#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace cameo {

inline std::atomic<unsigned>& max_threads_slot() {
    static std::atomic<unsigned> v{0};  // 0 = hardware default
    return v;
}

inline void set_max_threads(unsigned t) { max_threads_slot().store(t); }

inline unsigned effective_threads(std::size_t count) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned cap = max_threads_slot().load();
    if (cap != 0 && cap < hw) hw = cap;
    if (count < hw) hw = static_cast<unsigned>(count);
    return hw == 0 ? 1 : hw;
}

template <class Body>
void parallel_for(std::size_t count, Body&& body) {
    if (count == 0) return;
    const unsigned workers = effective_threads(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                body(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace cameo
