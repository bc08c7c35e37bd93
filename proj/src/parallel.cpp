#include "gamma2/parallel.hpp"

#include <atomic>
#include <mutex>

namespace g2 {

namespace {

std::atomic<int> g_threads{0};

int env_threads() {
    const char* s = std::getenv("GAMMA2_THREADS");
    if (!s) return 0;
    int v = std::atoi(s);
    return v > 0 ? v : 0;
}

} // namespace

int worker_threads() {
    int v = g_threads.load();
    if (v > 0) return v;
    v = env_threads();
    if (v > 0) return v;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

void set_worker_threads(int n) { g_threads.store(n > 0 ? n : 0); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(worker_threads()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;

    auto body = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace g2
