#include "subcheck/preference_list.hpp"

#include <stdexcept>

namespace subcheck {

PreferenceList PreferenceList::normalize(std::vector<AltSet> members,
                                         std::uint32_t universe_size) {
    PreferenceList out;
    out.m_ = universe_size;
    bool has_empty = false;
    for (const AltSet& s : members) {
        if (s.universe_size() != universe_size)
            throw std::invalid_argument("normalize: member drawn from a different universe");
        if (s.empty()) has_empty = true;
    }
    out.members_ = std::move(members);
    if (!has_empty) {
        out.members_.emplace_back(universe_size);
        out.empty_appended_ = true;
    }
    return out;
}

const AltSet& PreferenceList::member(std::size_t rank) const {
    if (rank >= members_.size()) throw std::out_of_range("PreferenceList::member: rank out of range");
    return members_[rank];
}

bool PreferenceList::precedes(std::size_t i, std::size_t j) const {
    if (i >= members_.size() || j >= members_.size())
        throw std::out_of_range("PreferenceList::precedes: rank out of range");
    return i < j;
}

}  // namespace subcheck
