#pragma once

#include <cstdint>
#include <vector>

#include "subcheck/preference_list.hpp"
#include "subcheck/verdict.hpp"

namespace subcheck {

// Ground truth straight from the definitions, feasible at desk scale
// (guarded by oracle_max on |U|). Used to validate both checkers.

// Memoized choice function: rank of f(A) for every subset A of U, indexed by
// bitmask. table[0] is the rank of the empty member.
struct ChoiceTable {
    std::uint32_t m = 0;
    std::vector<std::uint32_t> rank_of;  // size 2^m

    std::uint32_t lookup(std::uint64_t mask) const { return rank_of[mask]; }
};

enum class TableBuild {
    scan,   // per subset, scan the list for the first member contained in it
    stamp,  // per member in rank order, stamp its unassigned supersets
};

// Default cap on |U| for oracle operations: SUBCHECK_ORACLE_MAX when set
// (clamped to [0, 24]), otherwise 8.
std::uint32_t default_oracle_max();

// Throws std::invalid_argument when |U| exceeds oracle_max. Both build
// strategies produce identical tables.
ChoiceTable full_choice_table(const PreferenceList& list,
                              std::uint32_t oracle_max = default_oracle_max(),
                              TableBuild build = TableBuild::stamp);

// Enumerates every B subset of U (ascending bitmask) and every A subset of B
// (ascending submask), testing f(B) & A inside f(A) via the table. Returns
// the first violation in that canonical order, with x the smallest violating
// index, or Substitutable. 3^m pairs, O(1) lookups each.
Verdict brute_force_check(const PreferenceList& list,
                          std::uint32_t oracle_max = default_oracle_max());

// Every (X, Y, x) triple passing verify_witness, in canonical scan order:
// outer rank ascending, inner rank ascending, x ascending.
std::vector<Witness> enumerate_all_witnesses(const PreferenceList& list,
                                             std::uint32_t oracle_max = default_oracle_max());

}  // namespace subcheck
