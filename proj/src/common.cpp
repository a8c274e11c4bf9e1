#include "atomcount/common.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace atomcount {

namespace {
std::atomic<int> g_max_threads{0};  // 0 = use hardware concurrency
}

void set_max_threads(int n) { g_max_threads.store(n > 0 ? n : 0); }

int max_threads() {
    int n = g_max_threads.load();
    if (n > 0) return n;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

std::size_t chunk_count(std::int64_t n, std::int64_t chunk) {
    if (n <= 0) return 0;
    return static_cast<std::size_t>((n + chunk - 1) / chunk);
}

void parallel_chunks(std::int64_t n, std::int64_t chunk,
                     const std::function<void(std::int64_t, std::int64_t, std::size_t)>& fn) {
    if (n <= 0) return;
    const std::size_t nchunks = chunk_count(n, chunk);
    const int nthreads = std::min<std::size_t>(max_threads(), nchunks);
    if (nthreads <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c) {
            std::int64_t b = static_cast<std::int64_t>(c) * chunk;
            fn(b, std::min(b + chunk, n), c);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks) break;
            std::int64_t b = static_cast<std::int64_t>(c) * chunk;
            fn(b, std::min(b + chunk, n), c);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

double binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

}  // namespace atomcount
