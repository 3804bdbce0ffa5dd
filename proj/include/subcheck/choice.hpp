#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "subcheck/alt_set.hpp"
#include "subcheck/preference_list.hpp"
#include "subcheck/verdict.hpp"

namespace subcheck {

// The value of the induced choice function on one argument: the first member
// contained in it, together with its rank. Callers compare by rank where the
// precedence order matters.
struct Choice {
    std::size_t rank;
    const AltSet& set;
};

// First member (smallest rank) contained in a. Always defined: the empty set
// is on every normalized list. O(n * words).
Choice eval_choice(const PreferenceList& list, const AltSet& a);

// Lexicographically smallest rank pair (i, j), i < j, with
// member(i) a subset of member(j); nullopt when the list is coherent.
std::optional<RankPair> check_coherence(const PreferenceList& list);

struct CompletenessReport {
    bool complete = false;
    // d per member: the number of members contained in it, itself included.
    std::vector<std::uint64_t> per_member_counts;
    std::optional<IncompletenessCert> first_failure;
};

// d = 2^|X| for every member X iff every subset of every member is on the
// list. Requires a coherent list (the subset count is exact only then);
// throws std::invalid_argument on incoherent input.
CompletenessReport check_completeness(const PreferenceList& list);

// f(a) == a; on coherent lists this is equivalent to list membership of a.
bool is_fixed_point(const PreferenceList& list, const AltSet& a);

// Checks f(b) == f(a) for a sandwich f(a) <= b <= a. Holds for every
// coherent list. Throws std::invalid_argument when the sandwich
// precondition fails.
bool check_outcast(const PreferenceList& list, const AltSet& a, const AltSet& b);

}  // namespace subcheck
