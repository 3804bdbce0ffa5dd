#pragma once

// Shared fixtures and instance helpers for the unit and acceptance suites.

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "subcheck/alt_set.hpp"
#include "subcheck/preference_list.hpp"
#include "subcheck/gen.hpp"
#include "subcheck/rng.hpp"
#include "subcheck/universe.hpp"

namespace support {

inline subcheck::PreferenceList make_list(std::uint32_t m,
                                          std::initializer_list<std::uint64_t> masks) {
    std::vector<subcheck::AltSet> members;
    members.reserve(masks.size());
    for (auto mask : masks) members.push_back(subcheck::AltSet::from_mask(m, mask));
    return subcheck::PreferenceList::normalize(std::move(members), m);
}

// The running counterexample over {a,b,c,d}:
//   ({a,b}, {a,c,d}, {a,c}, {a}, {c}, {})
// Not substitutable; minimal witness is ({a,b}, {c}) with element b.
// Bit order: a=0, b=1, c=2, d=3.
inline subcheck::PreferenceList counterexample4() {
    return make_list(4, {0b0011, 0b1101, 0b0101, 0b0001, 0b0100, 0b0000});
}

// Responsive list for m=3, q=2 under priority a > b > c:
//   ({a,b}, {a,c}, {a}, {b,c}, {b}, {c}, {})
// Substitutable; discriminates the two polarity readings of the phase-2
// witness condition.
inline subcheck::PreferenceList resp3() {
    return make_list(3, {0b011, 0b101, 0b001, 0b110, 0b010, 0b100, 0b000});
}

// gen_random_coherent with the member count clamped to the universe size;
// property loops sweep m and n independently.
inline subcheck::PreferenceList random_coherent(std::uint32_t m, std::uint64_t n,
                                                std::uint64_t seed) {
    const std::uint64_t cap = m >= 64 ? n : std::min(n, std::uint64_t(1) << m);
    return subcheck::gen_random_coherent(m, cap, seed);
}

// Coherent lists whose member order is not tied to cardinality: distinct
// random non-empty subsets in random order, keeping a candidate only when
// no kept earlier member is contained in it. Complements the generator
// family, which orders by non-increasing size.
inline subcheck::PreferenceList random_coherent_any_order(std::uint32_t m, std::uint64_t n,
                                                          std::uint64_t seed) {
    subcheck::SplitMix64 rng(seed ^ 0xA5A5A5A5A5A5A5A5ull);
    const std::uint64_t subsets = std::uint64_t(1) << m;
    std::vector<std::uint64_t> masks(subsets - 1);
    std::iota(masks.begin(), masks.end(), std::uint64_t(1));
    rng.shuffle(std::span<std::uint64_t>(masks));

    std::vector<subcheck::AltSet> kept;
    for (std::uint64_t k = 0; k < masks.size() && kept.size() < n; ++k) {
        bool ok = true;
        for (const auto& earlier : kept) {
            if ((earlier.to_mask() & ~masks[k]) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) kept.push_back(subcheck::AltSet::from_mask(m, masks[k]));
    }
    return subcheck::PreferenceList::normalize(std::move(kept), m);
}

}  // namespace support
