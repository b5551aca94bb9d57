#pragma once
// ============================================================================
// common: shared plumbing for the mdim lab
//   - error taxonomy (validation -> exit 2, representability -> exit 3)
//   - compensated summation (the scalar reference the SIMD kernels must match)
//   - big integer counts + stable log
//   - env-capped deterministic parallel_for
// ============================================================================

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mdim {

inline constexpr const char* tool_name = "mdimlab";
inline constexpr const char* tool_version = "0.1.0";

// ----------------------------------------------------------------------------
// errors
// ----------------------------------------------------------------------------

// bad arguments, malformed config, impossible parameter combinations
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a requested orbit/word is not representable at the working depth
struct depth_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ----------------------------------------------------------------------------
// compensated summation
// ----------------------------------------------------------------------------

// Classic Kahan accumulator. Batch kernels replicate this exact update
// sequence per lane, so every backend agrees with this bit for bit.
struct kahan_acc {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

inline double kahan_total(const std::vector<double>& xs) {
    kahan_acc acc;
    for (double x : xs) acc.add(x);
    return acc.sum;
}

// ----------------------------------------------------------------------------
// big counts
// ----------------------------------------------------------------------------

using big_count = boost::multiprecision::cpp_int;

// natural log of a positive big count, stable for counts far beyond double range
inline double log_big(const big_count& v) {
    if (v <= 0) throw validation_error("log_big: count must be positive");
    std::size_t bits = boost::multiprecision::msb(v);
    if (bits <= 512) return std::log(v.convert_to<double>());
    big_count shifted = v >> (bits - 512);
    return std::log(shifted.convert_to<double>()) +
           static_cast<double>(bits - 512) * std::log(2.0);
}

// 2^e as a big count
inline big_count pow2_big(std::uint64_t e) {
    big_count one = 1;
    return one << e;
}

inline big_count pow_big(std::uint64_t base, std::uint64_t e) {
    big_count acc = 1;
    for (std::uint64_t i = 0; i < e; ++i) acc *= base;
    return acc;
}

// ----------------------------------------------------------------------------
// parallelism
// ----------------------------------------------------------------------------

// Worker cap from MDIMLAB_THREADS (>=1); defaults to hardware concurrency.
std::size_t worker_count();

// Runs fn(0..n-1). Work is split by index block; results must be written to
// index-addressed slots so assembly order never depends on the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// ----------------------------------------------------------------------------
// misc numeric helpers
// ----------------------------------------------------------------------------

// log(sum(exp(xs))) without overflow; xs may contain -inf entries
inline double log_sum_exp(const std::vector<double>& xs) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : xs) m = std::max(m, x);
    if (!std::isfinite(m)) return m;
    kahan_acc acc;
    for (double x : xs) acc.add(std::exp(x - m));
    return m + std::log(acc.sum);
}

std::string format_g9(double v);  // "%.9g", the fixed numeric width of all reports

}  // namespace mdim
