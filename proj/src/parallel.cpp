#include "eforce/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eforce {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("NOISE_BUDGET_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw > 8 ? 8 : hw);
}

void parallel_for(int n, const std::function<void(int)>& fn, int n_threads) {
    if (n <= 0) return;
    const int workers = std::min(resolve_threads(n_threads), n);
    if (workers == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::once_flag error_once;
    auto run = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::call_once(error_once, [&] { error = std::current_exception(); });
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace eforce
