#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "subcheck/preference_list.hpp"

namespace subcheck {

// Deterministic, seeded instance generators. Identical spec => identical
// list, byte-identical once serialized.
struct GenSpec {
    enum class Kind { responsive, complete_coherent, random_coherent };

    Kind kind = Kind::random_coherent;
    std::uint32_t m = 0;         // universe size
    std::uint32_t q = 0;         // capacity (responsive only)
    std::uint64_t n = 0;         // target member count (random_coherent only)
    std::uint64_t seed = 0;
};

const char* gen_kind_token(GenSpec::Kind kind);
std::optional<GenSpec::Kind> gen_kind_from_token(std::string_view token);

// All subsets of size <= q under a seeded random priority order, best rank
// vector first. The induced choice picks the min(q, |A|) highest-priority
// elements of A; these lists are the positive (substitutable) family, a
// property the oracle tests verify rather than assume. 1 <= q <= m <= 24.
PreferenceList gen_responsive(std::uint32_t m, std::uint32_t q, std::uint64_t seed);

// Same with an explicit priority order: priority[k] is the k-th best
// alternative, priority a permutation of 0..m-1.
PreferenceList responsive_from_priority(std::span<const std::uint32_t> priority, std::uint32_t q);

// A seeded random linear extension of reverse inclusion over all 2^m
// subsets: every set precedes its proper subsets, built by repeatedly
// placing a random currently-maximal unplaced set. Coherent and complete;
// n = 2^m makes these the benchmark family. m <= 20.
PreferenceList gen_complete_coherent(std::uint32_t m, std::uint64_t seed);

// n distinct random subsets ordered by non-increasing cardinality with
// seeded tie order, empty set appended when absent. Non-increasing
// cardinality guarantees coherence. n <= 2^m.
PreferenceList gen_random_coherent(std::uint32_t m, std::uint64_t n, std::uint64_t seed);

PreferenceList generate(const GenSpec& spec);

// Removes the member at the given rank. Requires a coherent list, a
// non-empty-set member, and a surviving proper-superset member; the result
// is then coherent but incomplete, hence a guaranteed non-substitutable
// instance. Throws std::invalid_argument when the guarantee is unavailable.
PreferenceList mutate_drop(const PreferenceList& list, std::size_t rank);

// Seeded choice of a rank mutate_drop accepts; nullopt when none exists.
std::optional<std::size_t> pick_droppable_rank(const PreferenceList& list, std::uint64_t seed);

}  // namespace subcheck
