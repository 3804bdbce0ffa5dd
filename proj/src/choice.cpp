#include "subcheck/choice.hpp"

#include <stdexcept>

namespace subcheck {

Choice eval_choice(const PreferenceList& list, const AltSet& a) {
    const auto& members = list.members();
    for (std::size_t r = 0; r < members.size(); ++r) {
        if (members[r].is_subset_of(a)) return Choice{r, members[r]};
    }
    // Unreachable on normalized lists: the empty set is always a member.
    throw std::logic_error("eval_choice: no member contained in the argument");
}

std::optional<RankPair> check_coherence(const PreferenceList& list) {
    const auto& members = list.members();
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (members[i].is_subset_of(members[j])) return RankPair{i, j};
        }
    }
    return std::nullopt;
}

CompletenessReport check_completeness(const PreferenceList& list) {
    if (check_coherence(list))
        throw std::invalid_argument("check_completeness: list is not coherent");

    const auto& members = list.members();
    const std::size_t n = members.size();
    CompletenessReport report;
    report.per_member_counts.assign(n, 1);  // each member contains itself

    // Coherence puts every subset of a member strictly after it, so the
    // count over later ranks is exact.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (members[j].is_subset_of(members[i])) ++report.per_member_counts[i];
        }
    }

    report.complete = true;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t card = members[i].count();
        std::optional<std::uint64_t> required;
        if (card < 63) required = std::uint64_t(1) << card;
        // d <= n, so an unrepresentable 2^|X| can never be met.
        if (!required || report.per_member_counts[i] != *required) {
            report.complete = false;
            report.first_failure =
                IncompletenessCert{i, report.per_member_counts[i], required};
            break;
        }
    }
    return report;
}

bool is_fixed_point(const PreferenceList& list, const AltSet& a) {
    return eval_choice(list, a).set == a;
}

bool check_outcast(const PreferenceList& list, const AltSet& a, const AltSet& b) {
    const Choice fa = eval_choice(list, a);
    if (!(fa.set.is_subset_of(b) && b.is_subset_of(a)))
        throw std::invalid_argument("check_outcast: need f(a) <= b <= a");
    return eval_choice(list, b).rank == fa.rank;
}

}  // namespace subcheck
