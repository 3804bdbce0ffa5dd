#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subcheck/verdict.hpp"

namespace subcheck {

// Wall-clock benchmark over complete coherent instances (n = 2^m, the range
// where the fast/naive gap is widest). Per size and algorithm: one warm-up
// run discarded, then reps timed runs, raw rows all emitted. Verdicts must
// agree across algorithms on each instance.

struct BenchRow {
    std::uint32_t m = 0;
    std::uint64_t n = 0;
    std::string algorithm;  // "fast" | "naive"
    std::uint64_t seed = 0;
    std::uint32_t rep = 0;
    std::int64_t elapsed_ns = 0;
    Outcome verdict = Outcome::Substitutable;
};

struct BenchConfig {
    std::vector<std::uint32_t> sizes;
    std::vector<std::string> algorithms{"fast", "naive"};
    std::uint32_t reps = 5;
    std::uint64_t seed = 1;
};

class BenchDisagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws BenchDisagreement when algorithms disagree on an instance and
// std::invalid_argument on an unknown algorithm name.
std::vector<BenchRow> run_bench(const BenchConfig& config);

// Header "m,N,algorithm,seed,rep,elapsed_ns,verdict" plus one line per row.
std::string bench_csv(const std::vector<BenchRow>& rows);

// Median of the elapsed times for one (m, algorithm) group; rows must be
// non-empty.
std::int64_t median_elapsed_ns(const std::vector<BenchRow>& rows, std::uint32_t m,
                               const std::string& algorithm);

// Least-squares slope of log(elapsed) against log(n) over one algorithm's
// per-size medians.
double loglog_slope(const std::vector<BenchRow>& rows, const std::string& algorithm);

}  // namespace subcheck
