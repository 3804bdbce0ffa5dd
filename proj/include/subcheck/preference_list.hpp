#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "subcheck/alt_set.hpp"

namespace subcheck {

// An ordered, strict preference list of subsets of the universe. Rank 0 is
// the most preferred member; the empty set is guaranteed present after
// normalization (appended last when absent). A member at rank i properly
// precedes one at rank j whenever i < j.
//
// Normalization preserves the given order and never deduplicates: duplicate
// members surface later as coherence violations.
class PreferenceList {
public:
    PreferenceList() = default;

    // Appends the empty set when absent; order otherwise preserved.
    // Throws std::invalid_argument if the sets disagree on the universe size.
    static PreferenceList normalize(std::vector<AltSet> members, std::uint32_t universe_size);

    std::size_t size() const { return members_.size(); }  // n, empty set included
    std::uint32_t universe_size() const { return m_; }
    bool empty_appended() const { return empty_appended_; }

    const AltSet& member(std::size_t rank) const;  // throws std::out_of_range
    const std::vector<AltSet>& members() const { return members_; }

    // The strict precedence relation: member(i) properly precedes member(j).
    // Throws std::out_of_range when a rank is not on the list.
    bool precedes(std::size_t i, std::size_t j) const;

    // Equality is over universe size and member sequence; the
    // empty_appended flag is provenance, not content.
    bool operator==(const PreferenceList& o) const {
        return m_ == o.m_ && members_ == o.members_;
    }

private:
    std::uint32_t m_ = 0;
    std::vector<AltSet> members_;
    bool empty_appended_ = false;
};

}  // namespace subcheck
