#include "kbqd/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace kbqd {

namespace {

int env_default_threads() {
    if (const char* env = std::getenv("KBQD_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::atomic<int>& thread_override() {
    static std::atomic<int> value{0};
    return value;
}

thread_local int parallel_depth = 0;

} // namespace

int num_threads() {
    int n = thread_override().load(std::memory_order_relaxed);
    if (n > 0) return n;
    static const int from_env = env_default_threads();
    return from_env;
}

void set_num_threads(int n) { thread_override().store(n > 0 ? n : 0, std::memory_order_relaxed); }

void parallel_for_chunks(std::int64_t begin, std::int64_t end,
                         const std::function<void(std::int64_t, std::int64_t)>& fn) {
    const std::int64_t count = end - begin;
    if (count <= 0) return;

    const int workers = parallel_depth > 0 ? 1 : num_threads();
    if (workers <= 1 || count == 1) {
        ++parallel_depth;
        fn(begin, end);
        --parallel_depth;
        return;
    }

    const std::int64_t chunks = std::min<std::int64_t>(workers, count);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(chunks));
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::int64_t lo = begin + count * c / chunks;
        const std::int64_t hi = begin + count * (c + 1) / chunks;
        pool.emplace_back([&fn, lo, hi] {
            ++parallel_depth;
            fn(lo, hi);
            --parallel_depth;
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace kbqd
