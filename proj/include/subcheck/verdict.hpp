#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "subcheck/alt_set.hpp"

namespace subcheck {

enum class Outcome { Substitutable, NotSubstitutable, NotCoherent };

// Which phase-2 behaviour the fast checker follows. figure1 stops with an
// incompleteness verdict before the witness scan; witness mode records
// incompleteness but always scans, so a negative verdict carries a witness.
enum class CheckerMode { figure1, witness };

// A certified reason the induced choice function is not substitutable:
// member X at x_rank, member Y at y_rank with X preceding Y, f(X u Y) = X,
// and x_elem in X - Y with f(Y u {x_elem}) = Y.
struct Witness {
    std::size_t x_rank = 0;
    std::size_t y_rank = 0;
    std::uint32_t x_elem = 0;

    bool operator==(const Witness&) const = default;
};

// A raw counterexample to substitutability: A subset of B with
// x_elem in (f(B) & A) - f(A).
struct Violation {
    AltSet a;
    AltSet b;
    std::uint32_t x_elem = 0;

    bool operator==(const Violation&) const = default;
};

// Ranks i < j with member(i) a subset of member(j).
struct RankPair {
    std::size_t i = 0;
    std::size_t j = 0;

    bool operator==(const RankPair&) const = default;
};

// First member whose subset count d falls short of 2^|X|. required is empty
// when |X| >= 63, where 2^|X| is never materialized: d <= n makes the member
// incomplete outright.
struct IncompletenessCert {
    std::size_t rank = 0;
    std::uint64_t d = 0;
    std::optional<std::uint64_t> required;

    bool operator==(const IncompletenessCert&) const = default;
};

// Full checker result. NotSubstitutable carries a witness in witness mode;
// in figure1 mode it may instead carry only the incompleteness certificate.
// NotCoherent records the violating rank pair.
struct Verdict {
    Outcome outcome = Outcome::Substitutable;
    bool coherent = false;
    std::optional<bool> complete;
    std::optional<Witness> witness;
    std::optional<Violation> violation;
    std::optional<IncompletenessCert> incompleteness;
    std::optional<RankPair> coherence_violation;
    const char* algorithm = "";
};

}  // namespace subcheck
