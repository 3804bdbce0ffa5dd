#include <doctest.h>

#include <stdexcept>

#include "subcheck/choice.hpp"
#include "subcheck/gen.hpp"
#include "subcheck/sensitivity.hpp"
#include "support.hpp"

using namespace subcheck;

TEST_CASE("sensitivity entries on the counterexample") {
    const auto list = support::counterexample4();
    const auto sens = build_sensitivity(list);
    REQUIRE(sens.member_count() == 6);
    REQUIRE(sens.universe_size() == 4);

    // {c} at rank 4: {a,c} fits inside {c} u {a}, nothing fits inside {c} u {b}
    CHECK(sens.sensitive(0, 4));   // a
    CHECK(!sens.sensitive(1, 4));  // b
    // {a,c} at rank 2: {a,c,d} fits inside {a,c} u {d}
    CHECK(sens.sensitive(3, 2));  // d
}

TEST_CASE("the full table on the counterexample") {
    const auto list = support::counterexample4();
    const auto sens = build_sensitivity(list);
    // expected rows as masks over a=0..d=3, per member rank
    const std::uint64_t expected[6] = {
        0b0000,  // {a,b}: nothing precedes it
        0b0010,  // {a,c,d}: b  (via {a,b})
        0b1010,  // {a,c}:   b, d
        0b0110,  // {a}:     b, c
        0b0001,  // {c}:     a
        0b0101,  // {}:      a, c
    };
    for (std::size_t r = 0; r < 6; ++r) {
        for (std::uint32_t x = 0; x < 4; ++x)
            CHECK(sens.sensitive(x, r) == bool((expected[r] >> x) & 1));
    }
}

TEST_CASE("elements of a member are never sensitive for it") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::uint32_t m = 1 + std::uint32_t(seed % 6);
        const auto list = support::random_coherent(m, 10, seed);
        const auto sens = build_sensitivity(list);
        for (std::size_t r = 0; r < list.size(); ++r)
            list.member(r).for_each([&](std::uint32_t x) { CHECK(!sens.sensitive(x, r)); });
    }
}

TEST_CASE("matrix soundness against direct evaluation") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::uint32_t m = 1 + std::uint32_t(seed % 6);
        const auto list = (seed % 2) ? support::random_coherent(m, seed % 21, seed)
                                     : support::random_coherent_any_order(m, 14, seed);
        const auto sens = build_sensitivity(list);
        for (std::size_t r = 0; r < list.size(); ++r) {
            for (std::uint32_t x = 0; x < m; ++x) {
                const bool moved = eval_choice(list, list.member(r).with(x)).rank != r;
                CHECK(sens.sensitive(x, r) == moved);
            }
        }
    }
}

TEST_CASE("build_sensitivity refuses incoherent lists") {
    const auto bad = support::make_list(2, {0b01, 0b11});
    CHECK_THROWS_AS(build_sensitivity(bad), std::invalid_argument);
}
