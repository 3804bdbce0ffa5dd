#include "subcheck/oracle.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "subcheck/checker.hpp"
#include "subcheck/choice.hpp"

namespace subcheck {

namespace {

// Hard cap keeping the 2^m table allocation sane regardless of the
// environment override.
constexpr std::uint32_t kTableHardCap = 24;

void require_within(const PreferenceList& list, std::uint32_t oracle_max, const char* who) {
    const std::uint32_t m = list.universe_size();
    if (m > oracle_max || m > kTableHardCap)
        throw std::invalid_argument(std::string(who) + ": universe size " + std::to_string(m) +
                                    " exceeds the oracle limit " +
                                    std::to_string(std::min(oracle_max, kTableHardCap)));
}

}  // namespace

std::uint32_t default_oracle_max() {
    if (const char* env = std::getenv("SUBCHECK_ORACLE_MAX")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value >= 0)
            return std::uint32_t(std::min<long>(value, kTableHardCap));
    }
    return 8;
}

ChoiceTable full_choice_table(const PreferenceList& list, std::uint32_t oracle_max,
                              TableBuild build) {
    require_within(list, oracle_max, "full_choice_table");

    const std::uint32_t m = list.universe_size();
    const auto& members = list.members();
    const std::uint64_t subsets = std::uint64_t(1) << m;

    ChoiceTable table;
    table.m = m;

    if (build == TableBuild::scan) {
        table.rank_of.resize(subsets);
        for (std::uint64_t a = 0; a < subsets; ++a) {
            for (std::uint32_t r = 0;; ++r) {
                if ((members[r].to_mask() & ~a) == 0) {
                    table.rank_of[a] = r;
                    break;
                }
            }
        }
    } else {
        constexpr std::uint32_t unassigned = ~std::uint32_t(0);
        table.rank_of.assign(subsets, unassigned);
        // Members in rank order; the first writer to a subset wins, which is
        // exactly the minimal-rank rule.
        for (std::uint32_t r = 0; r < members.size(); ++r) {
            const std::uint64_t base = members[r].to_mask();
            const std::uint64_t free_bits = (subsets - 1) & ~base;
            std::uint64_t extra = 0;
            while (true) {  // supersets of base: base | (every submask of its complement)
                const std::uint64_t a = base | extra;
                if (table.rank_of[a] == unassigned) table.rank_of[a] = r;
                if (extra == free_bits) break;
                extra = (extra - free_bits) & free_bits;
            }
        }
    }
    return table;
}

Verdict brute_force_check(const PreferenceList& list, std::uint32_t oracle_max) {
    require_within(list, oracle_max, "brute_force_check");

    Verdict v;
    v.algorithm = "brute";
    if (auto bad = check_coherence(list)) {
        v.outcome = Outcome::NotCoherent;
        v.coherent = false;
        v.coherence_violation = *bad;
        return v;
    }
    v.coherent = true;

    const std::uint32_t m = list.universe_size();
    const std::uint64_t subsets = std::uint64_t(1) << m;
    const ChoiceTable table = full_choice_table(list, oracle_max);
    const auto& members = list.members();

    // B ascending by bitmask, A ascending by submask of B, x the smallest
    // violating index: the canonical order for reproducible fixtures.
    for (std::uint64_t b = 0; b < subsets; ++b) {
        const std::uint64_t fb = members[table.lookup(b)].to_mask();
        std::uint64_t a = 0;
        while (true) {
            const std::uint64_t fa = members[table.lookup(a)].to_mask();
            const std::uint64_t promoted = (fb & a) & ~fa;
            if (promoted) {
                v.outcome = Outcome::NotSubstitutable;
                v.violation = Violation{AltSet::from_mask(m, a), AltSet::from_mask(m, b),
                                        std::uint32_t(std::countr_zero(promoted))};
                return v;
            }
            if (a == b) break;
            a = (a - b) & b;
        }
    }

    v.outcome = Outcome::Substitutable;
    return v;
}

std::vector<Witness> enumerate_all_witnesses(const PreferenceList& list,
                                             std::uint32_t oracle_max) {
    require_within(list, oracle_max, "enumerate_all_witnesses");
    if (check_coherence(list))
        throw std::invalid_argument("enumerate_all_witnesses: list is not coherent");

    const auto& members = list.members();
    const std::size_t n = members.size();

    std::vector<Witness> out;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const AltSet candidates = members[i] - members[j];
            candidates.for_each([&](std::uint32_t x) {
                const Witness w{i, j, x};
                if (verify_witness(list, w)) out.push_back(w);
            });
        }
    }
    return out;
}

}  // namespace subcheck
