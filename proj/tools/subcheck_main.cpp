// subcheck: decides whether the choice function induced by a strict
// preference list over a finite universe is substitutable, with explicit
// certificates either way, plus instance generation and a fast-vs-naive
// benchmark harness.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "subcheck/bench.hpp"
#include "subcheck/checker.hpp"
#include "subcheck/gen.hpp"
#include "subcheck/io.hpp"
#include "subcheck/oracle.hpp"
#include "subcheck/rng.hpp"

namespace {

// Exit codes: 0 substitutable, 1 not substitutable, 2 not coherent,
// 64 usage error, 65 parse error, 66 I/O error, 70 internal invariant
// failure.
constexpr int kExitSubstitutable = 0;
constexpr int kExitNotSubstitutable = 1;
constexpr int kExitNotCoherent = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitIo = 66;
constexpr int kExitInternal = 70;

constexpr const char* kVersion = "subcheck 1.0.0 (witness-polarity=insensitive)";

int outcome_exit_code(subcheck::Outcome outcome) {
    switch (outcome) {
        case subcheck::Outcome::Substitutable: return kExitSubstitutable;
        case subcheck::Outcome::NotSubstitutable: return kExitNotSubstitutable;
        case subcheck::Outcome::NotCoherent: return kExitNotCoherent;
    }
    return kExitInternal;
}

// Emitted certificates must satisfy their own definitions; anything else is
// an internal invariant failure.
bool certificates_hold(const subcheck::PreferenceList& list, const subcheck::Verdict& v) {
    if (v.witness && !subcheck::verify_witness(list, *v.witness)) return false;
    if (v.violation && !subcheck::verify_violation(list, *v.violation)) return false;
    if (v.coherence_violation) {
        const auto& p = *v.coherence_violation;
        if (p.i >= p.j || p.j >= list.size()) return false;
        if (!list.member(p.i).is_subset_of(list.member(p.j))) return false;
    }
    return true;
}

int cmd_check(const std::string& path, const std::string& algorithm, const std::string& mode_name,
              bool json, bool quiet) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kExitIo;
    }

    subcheck::ParsedList parsed;
    try {
        parsed = subcheck::parse_list(in);
    } catch (const subcheck::ParseError& e) {
        std::cerr << "error: " << path << ": " << e.what() << '\n';
        return kExitParse;
    }

    const subcheck::CheckerMode mode = mode_name == "figure1" ? subcheck::CheckerMode::figure1
                                                              : subcheck::CheckerMode::witness;

    subcheck::Verdict verdict;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (algorithm == "fast") {
            verdict = subcheck::find_witness_fast(parsed.list, mode);
        } else if (algorithm == "naive") {
            verdict = subcheck::find_witness_naive(parsed.list);
        } else {
            verdict = subcheck::brute_force_check(parsed.list);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const auto stop = std::chrono::steady_clock::now();
    const auto elapsed_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();

    // The witness always induces a concrete violation; report both.
    if (verdict.witness && !verdict.violation) {
        try {
            verdict.violation = subcheck::witness_to_violation(parsed.list, *verdict.witness);
        } catch (const std::exception& e) {
            std::cerr << "internal error: " << e.what() << '\n';
            return kExitInternal;
        }
    }
    if (!certificates_hold(parsed.list, verdict)) {
        std::cerr << "internal error: emitted certificate failed verification\n";
        return kExitInternal;
    }

    if (!quiet) {
        if (json)
            std::cout << subcheck::report_json(parsed.universe, parsed.list, verdict, mode,
                                               elapsed_ns)
                             .dump(2)
                      << '\n';
        else
            std::cout << subcheck::report_text(parsed.universe, parsed.list, verdict, mode,
                                               elapsed_ns);
    }
    return outcome_exit_code(verdict.outcome);
}

int cmd_gen(const std::string& kind_name, std::uint32_t m, std::uint32_t q, std::uint64_t n,
            std::uint64_t seed, const std::string& out_path) {
    const auto kind = subcheck::gen_kind_from_token(kind_name);
    if (!kind) {
        std::cerr << "error: unknown kind '" << kind_name << "'\n";
        return kExitUsage;
    }
    subcheck::GenSpec spec;
    spec.kind = *kind;
    spec.m = m;
    spec.q = q;
    spec.n = n;
    spec.seed = seed;

    subcheck::PreferenceList list;
    try {
        list = subcheck::generate(spec);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ostringstream header;
    header << "gen kind=" << subcheck::gen_kind_token(spec.kind) << " m=" << spec.m;
    if (spec.kind == subcheck::GenSpec::Kind::responsive) header << " q=" << spec.q;
    if (spec.kind == subcheck::GenSpec::Kind::random_coherent) header << " n=" << spec.n;
    header << " seed=" << spec.seed << " prng=" << subcheck::SplitMix64::name;

    const auto universe = subcheck::Universe::letters(m);
    const std::string text = subcheck::serialize_list(universe, list, header.str());

    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitIo;
    }
    out << text;
    return out ? 0 : kExitIo;
}

int cmd_bench(const std::string& sizes_csv, const std::string& algorithms_csv, std::uint32_t reps,
              std::uint64_t seed, const std::string& csv_path) {
    subcheck::BenchConfig config;
    config.reps = reps;
    config.seed = seed;

    std::stringstream sizes(sizes_csv);
    std::string item;
    while (std::getline(sizes, item, ',')) {
        try {
            config.sizes.push_back(std::uint32_t(std::stoul(item)));
        } catch (const std::exception&) {
            std::cerr << "error: bad size '" << item << "'\n";
            return kExitUsage;
        }
    }
    config.algorithms.clear();
    std::stringstream algorithms(algorithms_csv);
    while (std::getline(algorithms, item, ',')) config.algorithms.push_back(item);
    if (config.sizes.empty() || config.algorithms.empty()) {
        std::cerr << "error: need at least one size and one algorithm\n";
        return kExitUsage;
    }

    std::vector<subcheck::BenchRow> rows;
    try {
        rows = subcheck::run_bench(config);
    } catch (const subcheck::BenchDisagreement& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const std::string csv = subcheck::bench_csv(rows);
    if (csv_path.empty() || csv_path == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(csv_path);
        if (!out) {
            std::cerr << "error: cannot write '" << csv_path << "'\n";
            return kExitIo;
        }
        out << csv;
    }

    for (const std::uint32_t m : config.sizes) {
        for (const std::string& algorithm : config.algorithms) {
            std::cerr << "m=" << m << " " << algorithm
                      << " median_ns=" << subcheck::median_elapsed_ns(rows, m, algorithm) << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Substitutability checker for strict preference lists"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // check
    std::string check_file;
    std::string algorithm = "fast";
    std::string mode = "witness";
    bool json = false;
    bool quiet = false;
    auto* check = app.add_subcommand("check", "Decide substitutability of a list file");
    check->add_option("file", check_file, "preference list file")->required();
    check->add_option("--algorithm", algorithm, "fast | naive | brute")
        ->check(CLI::IsMember({"fast", "naive", "brute"}))
        ->capture_default_str();
    check->add_option("--mode", mode, "figure1 | witness (fast checker only)")
        ->check(CLI::IsMember({"figure1", "witness"}))
        ->capture_default_str();
    check->add_flag("--json", json, "JSON report on stdout");
    check->add_flag("--quiet", quiet, "no report, exit code only");

    // gen
    std::string kind;
    std::uint32_t gen_m = 0;
    std::uint32_t gen_q = 0;
    std::uint64_t gen_n = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a deterministic instance");
    gen->add_option("kind", kind, "responsive | complete_coherent | random_coherent")->required();
    gen->add_option("-m", gen_m, "universe size")->required();
    gen->add_option("-q", gen_q, "capacity (responsive)");
    gen->add_option("-n", gen_n, "member count (random_coherent)");
    gen->add_option("--seed", gen_seed, "PRNG seed")->capture_default_str();
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // bench
    std::string bench_sizes;
    std::string bench_algorithms = "fast,naive";
    std::uint32_t bench_reps = 5;
    std::uint64_t bench_seed = 1;
    std::string bench_csv_path;
    auto* bench = app.add_subcommand("bench", "Time the checkers on complete coherent instances");
    bench->add_option("-m,--sizes", bench_sizes, "comma-separated universe sizes")->required();
    bench->add_option("--algorithms", bench_algorithms, "comma-separated: fast,naive")
        ->capture_default_str();
    bench->add_option("--reps", bench_reps, "timed repetitions per point")
        ->capture_default_str();
    bench->add_option("--seed", bench_seed, "instance seed")->capture_default_str();
    bench->add_option("--csv", bench_csv_path, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(check_file, algorithm, mode, json, quiet);
        if (gen->parsed()) return cmd_gen(kind, gen_m, gen_q, gen_n, gen_seed, gen_out);
        if (bench->parsed())
            return cmd_bench(bench_sizes, bench_algorithms, bench_reps, bench_seed,
                             bench_csv_path);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
