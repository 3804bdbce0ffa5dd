#include "subcheck/checker.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "subcheck/choice.hpp"

namespace subcheck {

namespace {

Verdict not_coherent(const char* algorithm, RankPair pair) {
    Verdict v;
    v.outcome = Outcome::NotCoherent;
    v.coherent = false;
    v.coherence_violation = pair;
    v.algorithm = algorithm;
    return v;
}

std::optional<IncompletenessCert> first_incomplete(const std::vector<AltSet>& members,
                                                   const std::vector<std::uint64_t>& d) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        const std::uint32_t card = members[i].count();
        std::optional<std::uint64_t> required;
        if (card < 63) required = std::uint64_t(1) << card;
        // d <= n, so an unrepresentable 2^|X| is unreachable anyway.
        if (!required || d[i] != *required) return IncompletenessCert{i, d[i], required};
    }
    return std::nullopt;
}

}  // namespace

namespace {

// Member words packed contiguously, one stride per rank: the pair loops are
// the whole cost of the checker, and chasing each member's own allocation
// there throws the n^2 scan out of cache.
struct PackedMembers {
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;

    explicit PackedMembers(const std::vector<AltSet>& members) {
        if (!members.empty()) words = members[0].word_count();
        bits.resize(members.size() * words);
        for (std::size_t r = 0; r < members.size(); ++r)
            for (std::size_t w = 0; w < words; ++w) bits[r * words + w] = members[r].word(w);
    }

    const std::uint64_t* row(std::size_t r) const { return bits.data() + r * words; }
};

struct Phase1Result {
    std::optional<RankPair> incoherent;
    std::vector<std::uint64_t> d;     // subset-member counts, self included
    std::vector<std::uint64_t> sens;  // bit-packed rows, one stride per rank
};

// One pass over ordered pairs (i, j), i < j, fusing the coherence abort,
// the subset counts, and the sensitivity bits. member(i) - member(j) = {x}
// is the only way member(i) fits inside member(j) u {x} with x outside
// member(j).
Phase1Result run_phase1(const PackedMembers& packed, std::size_t n) {
    const std::size_t words = packed.words;
    Phase1Result out;
    out.d.assign(n, 1);
    out.sens.assign(n * words, 0);

    if (words == 1) {
        const std::uint64_t* pk = packed.bits.data();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const std::uint64_t xw = pk[i];
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::uint64_t yw = pk[j];
                const std::uint64_t diff = xw & ~yw;
                if (!diff) {
                    out.incoherent = RankPair{i, j};
                    return out;
                }
                if ((yw & ~xw) == 0) ++out.d[i];
                // A singleton difference is itself the sensitivity bit.
                if ((diff & (diff - 1)) == 0) out.sens[j] |= diff;
            }
        }
        return out;
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::uint64_t* xi = packed.row(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint64_t* yj = packed.row(j);
            bool x_sub_y = true;
            bool y_sub_x = true;
            std::uint32_t diff_bits = 0;
            std::size_t diff_word = 0;
            std::uint64_t diff_mask = 0;
            for (std::size_t w = 0; w < words; ++w) {
                const std::uint64_t x_minus_y = xi[w] & ~yj[w];
                if (x_minus_y) {
                    x_sub_y = false;
                    if (diff_bits == 0) {
                        diff_word = w;
                        diff_mask = x_minus_y & (~x_minus_y + 1);
                    }
                    diff_bits += std::uint32_t(std::popcount(x_minus_y));
                }
                if (yj[w] & ~xi[w]) y_sub_x = false;
            }
            if (x_sub_y) {
                out.incoherent = RankPair{i, j};
                return out;
            }
            if (y_sub_x) ++out.d[i];
            if (diff_bits == 1) out.sens[j * words + diff_word] |= diff_mask;
        }
    }
    return out;
}

}  // namespace

Verdict find_witness_fast(const PreferenceList& list, CheckerMode mode) {
    const auto& members = list.members();
    const std::size_t n = members.size();

    const PackedMembers packed(members);
    const std::size_t words = packed.words;
    Phase1Result phase1 = run_phase1(packed, n);
    if (phase1.incoherent) return not_coherent("fast", *phase1.incoherent);

    Verdict v;
    v.coherent = true;
    v.algorithm = "fast";
    v.incompleteness = first_incomplete(members, phase1.d);
    v.complete = !v.incompleteness.has_value();

    // Incomplete lists are never substitutable; figure1 mode stops on that
    // alone, without producing a witness.
    if (v.incompleteness && mode == CheckerMode::figure1) {
        v.outcome = Outcome::NotSubstitutable;
        return v;
    }

    // Phase 2: scan pairs (X, Y), X before Y, outer then inner rank
    // ascending. At each pair no witness with an earlier first component
    // exists, so X insensitive to all of Y - X is equivalent to
    // f(X u Y) = X; Y insensitive to x gives f(Y u {x}) = Y. The first hit
    // is therefore the minimal witness.
    const std::uint64_t* sens = phase1.sens.data();
    if (words == 1) {
        const std::uint64_t* pk = packed.bits.data();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const std::uint64_t xw = pk[i];
            const std::uint64_t row_i = sens[i];
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::uint64_t yw = pk[j];
                if ((yw & ~xw) & row_i) continue;
                const std::uint64_t pick = (xw & ~yw) & ~sens[j];
                if (pick) {
                    v.outcome = Outcome::NotSubstitutable;
                    v.witness = Witness{i, j, std::uint32_t(std::countr_zero(pick))};
                    return v;
                }
            }
        }
        v.outcome = Outcome::Substitutable;
        return v;
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::uint64_t* xi = packed.row(i);
        const std::uint64_t* row_i = sens + i * words;
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint64_t* yj = packed.row(j);
            bool x_insensitive = true;
            for (std::size_t w = 0; w < words; ++w) {
                if ((yj[w] & ~xi[w]) & row_i[w]) {
                    x_insensitive = false;
                    break;
                }
            }
            if (!x_insensitive) continue;
            const std::uint64_t* row_j = sens + j * words;
            for (std::size_t w = 0; w < words; ++w) {
                const std::uint64_t pick = (xi[w] & ~yj[w]) & ~row_j[w];
                if (pick) {
                    v.outcome = Outcome::NotSubstitutable;
                    v.witness = Witness{
                        i, j, std::uint32_t(w) * 64 + std::uint32_t(std::countr_zero(pick))};
                    return v;
                }
            }
        }
    }

    v.outcome = Outcome::Substitutable;
    return v;
}

Verdict find_witness_naive(const PreferenceList& list) {
    if (auto bad = check_coherence(list)) return not_coherent("naive", *bad);

    const auto& members = list.members();
    const std::size_t n = members.size();
    const std::uint32_t m = list.universe_size();

    Verdict v;
    v.coherent = true;
    v.algorithm = "naive";

    // Phase 1: n * |U| direct evaluations tabulate, per member, the
    // elements it is insensitive to.
    std::vector<AltSet> insens(n, AltSet(m));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::uint32_t x = 0; x < m; ++x) {
            if (eval_choice(list, members[r].with(x)).rank == r) insens[r].set(x);
        }
    }

    // Phase 2: identical pair order and certificate choice as the fast
    // scan, with f(X u Y) evaluated directly.
    const std::size_t words = AltSet(m).word_count();
    AltSet scratch(m);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::uint64_t* xi = members[i].data();
        for (std::size_t j = i + 1; j < n; ++j) {
            scratch.assign_union(members[i], members[j]);
            if (eval_choice(list, scratch).rank != i) continue;
            const std::uint64_t* yj = members[j].data();
            const std::uint64_t* ins_j = insens[j].data();
            for (std::size_t w = 0; w < words; ++w) {
                const std::uint64_t pick = (xi[w] & ~yj[w]) & ins_j[w];
                if (pick) {
                    v.outcome = Outcome::NotSubstitutable;
                    v.witness = Witness{
                        i, j, std::uint32_t(w) * 64 + std::uint32_t(std::countr_zero(pick))};
                    return v;
                }
            }
        }
    }

    v.outcome = Outcome::Substitutable;
    return v;
}

bool verify_witness(const PreferenceList& list, const Witness& w) {
    const std::size_t n = list.size();
    if (w.x_rank >= n || w.y_rank >= n || w.x_rank >= w.y_rank) return false;
    if (w.x_elem >= list.universe_size()) return false;
    const AltSet& x_set = list.member(w.x_rank);
    const AltSet& y_set = list.member(w.y_rank);
    if (!x_set.test(w.x_elem) || y_set.test(w.x_elem)) return false;
    if (eval_choice(list, x_set | y_set).rank != w.x_rank) return false;
    return eval_choice(list, y_set.with(w.x_elem)).rank == w.y_rank;
}

Violation witness_to_violation(const PreferenceList& list, const Witness& w) {
    if (!verify_witness(list, w))
        throw std::invalid_argument("witness_to_violation: not a valid witness");
    const AltSet& x_set = list.member(w.x_rank);
    const AltSet& y_set = list.member(w.y_rank);
    Violation v{y_set.with(w.x_elem), x_set | y_set, w.x_elem};
    if (!verify_violation(list, v))
        throw std::logic_error("witness_to_violation: constructed pair is not a violation");
    return v;
}

bool verify_violation(const PreferenceList& list, const Violation& v) {
    const std::uint32_t m = list.universe_size();
    if (v.a.universe_size() != m || v.b.universe_size() != m || v.x_elem >= m) return false;
    if (!v.a.is_subset_of(v.b)) return false;
    if (!v.a.test(v.x_elem)) return false;
    if (!eval_choice(list, v.b).set.test(v.x_elem)) return false;
    return !eval_choice(list, v.a).set.test(v.x_elem);
}

}  // namespace subcheck
