#include "subcheck/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "subcheck/checker.hpp"
#include "subcheck/gen.hpp"
#include "subcheck/io.hpp"

namespace subcheck {

namespace {

Verdict run_algorithm(const std::string& algorithm, const PreferenceList& list) {
    if (algorithm == "fast") return find_witness_fast(list, CheckerMode::witness);
    if (algorithm == "naive") return find_witness_naive(list);
    throw std::invalid_argument("bench: unknown algorithm '" + algorithm + "'");
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    using clock = std::chrono::steady_clock;

    std::vector<BenchRow> rows;
    for (const std::uint32_t m : config.sizes) {
        const PreferenceList list = gen_complete_coherent(m, config.seed);
        std::optional<Outcome> agreed;
        for (const std::string& algorithm : config.algorithms) {
            // Warm-up run, discarded.
            Outcome outcome = run_algorithm(algorithm, list).outcome;
            for (std::uint32_t rep = 0; rep < config.reps; ++rep) {
                const auto start = clock::now();
                const Verdict v = run_algorithm(algorithm, list);
                const auto stop = clock::now();
                outcome = v.outcome;
                rows.push_back(BenchRow{
                    m, list.size(), algorithm, config.seed, rep,
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count(),
                    outcome});
            }
            if (agreed && *agreed != outcome)
                throw BenchDisagreement("bench: verdicts disagree at m=" + std::to_string(m) +
                                        " (" + outcome_token(*agreed) + " vs " +
                                        outcome_token(outcome) + ")");
            agreed = outcome;
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "m,N,algorithm,seed,rep,elapsed_ns,verdict\n";
    for (const BenchRow& r : rows) {
        out << r.m << ',' << r.n << ',' << r.algorithm << ',' << r.seed << ',' << r.rep << ','
            << r.elapsed_ns << ',' << outcome_token(r.verdict) << '\n';
    }
    return out.str();
}

std::int64_t median_elapsed_ns(const std::vector<BenchRow>& rows, std::uint32_t m,
                               const std::string& algorithm) {
    std::vector<std::int64_t> times;
    for (const BenchRow& r : rows)
        if (r.m == m && r.algorithm == algorithm) times.push_back(r.elapsed_ns);
    if (times.empty()) throw std::invalid_argument("median_elapsed_ns: no matching rows");
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    if (times.size() % 2) return times[mid];
    return (times[mid - 1] + times[mid]) / 2;
}

double loglog_slope(const std::vector<BenchRow>& rows, const std::string& algorithm) {
    // One (log n, log median) point per size, then least squares.
    std::vector<std::uint32_t> sizes;
    for (const BenchRow& r : rows)
        if (r.algorithm == algorithm &&
            std::find(sizes.begin(), sizes.end(), r.m) == sizes.end())
            sizes.push_back(r.m);
    if (sizes.size() < 2) throw std::invalid_argument("loglog_slope: need at least two sizes");

    std::vector<double> xs, ys;
    for (const std::uint32_t m : sizes) {
        std::uint64_t n = 0;
        for (const BenchRow& r : rows)
            if (r.m == m && r.algorithm == algorithm) {
                n = r.n;
                break;
            }
        xs.push_back(std::log(double(n)));
        ys.push_back(std::log(double(median_elapsed_ns(rows, m, algorithm))));
    }

    const double count = double(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace subcheck
