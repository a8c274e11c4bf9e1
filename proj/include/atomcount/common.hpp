#ifndef ATOMCOUNT_COMMON_HPP
#define ATOMCOUNT_COMMON_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace atomcount {

using cdouble = std::complex<double>;
using Vec3 = std::array<double, 3>;

// Error hierarchy. The CLI maps these onto exit codes: ConfigError -> 2,
// CapacityError -> 3, InvariantError -> 4.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when adaptive quadrature exhausts its subdivision budget. Carries the
// best estimate obtained so far.
struct QuadratureError : std::runtime_error {
    cdouble best_estimate;
    double error_estimate;
    QuadratureError(const std::string& msg, cdouble best, double err)
        : std::runtime_error(msg), best_estimate(best), error_estimate(err) {}
};

// Global worker-thread budget for data-parallel loops (Ryser subset blocks,
// matrix assembly). Results are independent of the thread count: work is
// split into fixed-size chunks and partial results are combined in chunk
// order.
void set_max_threads(int n);
int max_threads();

// Runs fn(begin, end, chunk_index) over [0, n) split into chunks of size
// chunk. Chunk boundaries depend only on (n, chunk), never on the thread
// count.
void parallel_chunks(std::int64_t n, std::int64_t chunk,
                     const std::function<void(std::int64_t, std::int64_t, std::size_t)>& fn);

std::size_t chunk_count(std::int64_t n, std::int64_t chunk);

// Binomial coefficient as double; returns 0 for k < 0, k > n or n < 0
// (the convention used throughout the generating-function formulas).
double binomial(int n, int k);

}  // namespace atomcount

#endif
