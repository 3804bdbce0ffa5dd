#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "subcheck/preference_list.hpp"

namespace subcheck {

// Boolean |U| x n table, bit-packed one row per member rank. Entry (x, r) is
// true iff member r is sensitive to x: f(member(r) u {x}) != member(r),
// equivalently some earlier member fits inside member(r) u {x}. Entries with
// x in member(r) are always false.
//
// Rows are word-aligned so phase-2 scans reduce to word AND/ANDNOT against
// AltSet words.
class SensMatrix {
public:
    SensMatrix() = default;
    SensMatrix(std::size_t member_count, std::uint32_t universe_size)
        : m_(universe_size),
          words_per_row_((std::size_t(universe_size) + 63) / 64),
          n_(member_count),
          bits_(words_per_row_ * member_count, 0) {}

    std::size_t member_count() const { return n_; }
    std::uint32_t universe_size() const { return m_; }
    std::size_t words_per_row() const { return words_per_row_; }

    bool sensitive(std::uint32_t x, std::size_t rank) const {
        return (row(rank)[x / 64] >> (x % 64)) & 1u;
    }

    void mark_sensitive(std::uint32_t x, std::size_t rank) {
        row_mut(rank)[x / 64] |= std::uint64_t(1) << (x % 64);
    }

    const std::uint64_t* row(std::size_t rank) const { return bits_.data() + rank * words_per_row_; }

    bool operator==(const SensMatrix&) const = default;

private:
    std::uint64_t* row_mut(std::size_t rank) { return bits_.data() + rank * words_per_row_; }

    std::uint32_t m_ = 0;
    std::size_t words_per_row_ = 0;
    std::size_t n_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Builds the sensitivity table from the ordered-pair loop: for members
// X preceding Y, X fits inside Y u {x} for some x outside Y exactly when
// X - Y is a single element. Throws std::invalid_argument on incoherent
// input; the fused checker reports NotCoherent instead.
SensMatrix build_sensitivity(const PreferenceList& list);

}  // namespace subcheck
