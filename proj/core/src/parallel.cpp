#include "floodvibe/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace floodvibe {

int thread_count() {
    int n = 0;
    if (const char* env = std::getenv("FLOODVIBE_THREADS")) {
        n = std::atoi(env);
    }
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    return std::clamp(n, 1, 256);
}

void parallel_rows(int n, const std::function<void(int, int)>& fn) {
    const int workers = std::min(thread_count(), std::max(n, 1));
    if (workers <= 1 || n < 64) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int begin = w * chunk;
        const int end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace floodvibe
