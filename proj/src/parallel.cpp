#include "qpf/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qpf {

int resolve_workers(int requested) {
    // The environment variable wins over any configured count.
    if (const char* env = std::getenv("QPF_RDM_THREADS")) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), value);
        if (ec == std::errc{} && value > 0) return value;
    }
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::uint64_t count, int workers,
                  const std::function<void(std::uint64_t)>& fn) {
    workers = std::min<std::uint64_t>(std::max(workers, 1), std::max<std::uint64_t>(count, 1));
    if (workers <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
        const std::uint64_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::uint64_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace qpf
