#include "subcheck/gen.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "subcheck/choice.hpp"
#include "subcheck/rng.hpp"

namespace subcheck {

namespace {

// Enumeration guards: these families materialize up to 2^m members.
constexpr std::uint32_t kEnumerationCap = 20;

std::vector<std::uint32_t> seeded_priority(std::uint32_t m, std::uint64_t seed) {
    std::vector<std::uint32_t> priority(m);
    std::iota(priority.begin(), priority.end(), 0u);
    SplitMix64 rng(seed);
    rng.shuffle(std::span<std::uint32_t>(priority));
    return priority;
}

}  // namespace

const char* gen_kind_token(GenSpec::Kind kind) {
    switch (kind) {
        case GenSpec::Kind::responsive: return "responsive";
        case GenSpec::Kind::complete_coherent: return "complete_coherent";
        case GenSpec::Kind::random_coherent: return "random_coherent";
    }
    return "?";
}

std::optional<GenSpec::Kind> gen_kind_from_token(std::string_view token) {
    if (token == "responsive") return GenSpec::Kind::responsive;
    if (token == "complete_coherent") return GenSpec::Kind::complete_coherent;
    if (token == "random_coherent") return GenSpec::Kind::random_coherent;
    return std::nullopt;
}

PreferenceList responsive_from_priority(std::span<const std::uint32_t> priority,
                                        std::uint32_t q) {
    const std::uint32_t m = std::uint32_t(priority.size());
    if (q < 1 || q > m) throw std::invalid_argument("responsive: need 1 <= q <= m");
    if (m > kEnumerationCap) throw std::invalid_argument("responsive: universe too large");

    std::vector<std::uint32_t> rank_of(m);
    for (std::uint32_t k = 0; k < m; ++k) rank_of[priority[k]] = k;

    // Rank vector of a subset: its elements' priority ranks, best first,
    // padded to length q with a sentinel worse than any rank. Sorting the
    // size-<=q subsets by these vectors puts the preferred set first and
    // the empty set (all sentinel) last.
    const std::uint32_t sentinel = m;
    struct Entry {
        std::vector<std::uint32_t> vec;
        std::uint64_t mask;
    };
    std::vector<Entry> entries;
    const std::uint64_t subsets = std::uint64_t(1) << m;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        if (std::uint32_t(std::popcount(mask)) > q) continue;
        std::vector<std::uint32_t> vec;
        vec.reserve(q);
        for (std::uint64_t rest = mask; rest; rest &= rest - 1)
            vec.push_back(rank_of[std::uint32_t(std::countr_zero(rest))]);
        std::sort(vec.begin(), vec.end());
        vec.resize(q, sentinel);
        entries.push_back(Entry{std::move(vec), mask});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.vec < b.vec; });

    std::vector<AltSet> members;
    members.reserve(entries.size());
    for (const Entry& e : entries) members.push_back(AltSet::from_mask(m, e.mask));
    return PreferenceList::normalize(std::move(members), m);
}

PreferenceList gen_responsive(std::uint32_t m, std::uint32_t q, std::uint64_t seed) {
    const auto priority = seeded_priority(m, seed);
    return responsive_from_priority(priority, q);
}

PreferenceList gen_complete_coherent(std::uint32_t m, std::uint64_t seed) {
    if (m > kEnumerationCap) throw std::invalid_argument("complete_coherent: universe too large");

    const std::uint64_t subsets = std::uint64_t(1) << m;
    SplitMix64 rng(seed);

    // Random linear extension of reverse inclusion: a set becomes available
    // once all its immediate supersets are placed; draw uniformly from the
    // available pool. The empty set is always last.
    std::vector<std::uint32_t> missing(subsets);  // unplaced immediate supersets
    for (std::uint64_t s = 0; s < subsets; ++s)
        missing[s] = m - std::uint32_t(std::popcount(s));

    std::vector<std::uint64_t> pool{subsets - 1};
    std::vector<AltSet> members;
    members.reserve(subsets);
    while (!pool.empty()) {
        const std::size_t pick = std::size_t(rng.below(pool.size()));
        const std::uint64_t s = pool[pick];
        pool[pick] = pool.back();
        pool.pop_back();
        members.push_back(AltSet::from_mask(m, s));
        for (std::uint64_t rest = s; rest; rest &= rest - 1) {
            const std::uint64_t child = s & ~(rest & (~rest + 1));
            if (--missing[child] == 0) pool.push_back(child);
        }
    }
    return PreferenceList::normalize(std::move(members), m);
}

PreferenceList gen_random_coherent(std::uint32_t m, std::uint64_t n, std::uint64_t seed) {
    if (m < 64 && n > (std::uint64_t(1) << m))
        throw std::invalid_argument("random_coherent: n exceeds the number of subsets");

    SplitMix64 rng(seed);
    std::vector<AltSet> samples;

    if (m <= kEnumerationCap) {
        // Exact distinct sampling: shuffle all subsets, take the first n.
        const std::uint64_t subsets = std::uint64_t(1) << m;
        std::vector<std::uint64_t> all(subsets);
        std::iota(all.begin(), all.end(), std::uint64_t(0));
        rng.shuffle(std::span<std::uint64_t>(all));
        samples.reserve(n);
        for (std::uint64_t k = 0; k < n; ++k) samples.push_back(AltSet::from_mask(m, all[k]));
    } else {
        // Sparse regime: rejection sampling on random words.
        std::set<AltSet> seen;
        while (seen.size() < n) {
            AltSet s(m);
            for (std::uint32_t x = 0; x < m; x += 64) {
                std::uint64_t w = rng.next();
                for (std::uint32_t b = 0; b < 64 && x + b < m; ++b)
                    if ((w >> b) & 1) s.set(x + b);
            }
            seen.insert(std::move(s));
        }
        samples.assign(seen.begin(), seen.end());
        rng.shuffle(std::span<AltSet>(samples));
    }

    // Non-increasing cardinality makes the list coherent: an earlier set
    // can only be contained in a later one if sizes increased. Ties keep
    // the shuffled order.
    std::stable_sort(samples.begin(), samples.end(),
                     [](const AltSet& a, const AltSet& b) { return a.count() > b.count(); });
    return PreferenceList::normalize(std::move(samples), m);
}

PreferenceList generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenSpec::Kind::responsive: return gen_responsive(spec.m, spec.q, spec.seed);
        case GenSpec::Kind::complete_coherent: return gen_complete_coherent(spec.m, spec.seed);
        case GenSpec::Kind::random_coherent:
            return gen_random_coherent(spec.m, spec.n, spec.seed);
    }
    throw std::invalid_argument("generate: unknown kind");
}

namespace {

bool droppable(const PreferenceList& list, std::size_t rank) {
    const AltSet& target = list.member(rank);
    if (target.empty()) return false;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i == rank) continue;
        // A proper superset member survives the drop and then lacks a
        // subset, which is what forces incompleteness.
        if (target.is_subset_of(list.member(i)) && target != list.member(i)) return true;
    }
    return false;
}

}  // namespace

PreferenceList mutate_drop(const PreferenceList& list, std::size_t rank) {
    if (rank >= list.size()) throw std::invalid_argument("mutate_drop: rank out of range");
    if (check_coherence(list)) throw std::invalid_argument("mutate_drop: list is not coherent");
    if (list.member(rank).empty())
        throw std::invalid_argument("mutate_drop: the empty set is mandatory");
    if (!droppable(list, rank))
        throw std::invalid_argument(
            "mutate_drop: no surviving superset member; incompleteness not guaranteed");

    std::vector<AltSet> members;
    members.reserve(list.size() - 1);
    for (std::size_t i = 0; i < list.size(); ++i)
        if (i != rank) members.push_back(list.member(i));
    return PreferenceList::normalize(std::move(members), list.universe_size());
}

std::optional<std::size_t> pick_droppable_rank(const PreferenceList& list, std::uint64_t seed) {
    std::vector<std::size_t> eligible;
    for (std::size_t r = 0; r < list.size(); ++r)
        if (!list.member(r).empty() && droppable(list, r)) eligible.push_back(r);
    if (eligible.empty()) return std::nullopt;
    SplitMix64 rng(seed);
    return eligible[std::size_t(rng.below(eligible.size()))];
}

}  // namespace subcheck
