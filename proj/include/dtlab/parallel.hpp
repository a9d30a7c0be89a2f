#pragma once

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace dtlab {

// Worker count: DTLAB_THREADS env var caps parallelism, 0 or unset = auto.
inline int thread_budget() {
    if (const char* env = std::getenv("DTLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Index-parallel loop. Each index writes only its own outputs, so results do
// not depend on the schedule.
template <class Body>
void parallel_for(std::ptrdiff_t count, const Body& body) {
    const int workers = thread_budget();
    if (workers <= 1 || count < 2) {
        for (std::ptrdiff_t i = 0; i < count; ++i) body(i);
        return;
    }
    const int used = static_cast<int>(std::min<std::ptrdiff_t>(workers, count));
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (int w = 0; w < used; ++w) {
        pool.emplace_back([&, w]() {
            for (std::ptrdiff_t i = w; i < count; i += used) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace dtlab
