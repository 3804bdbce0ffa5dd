#include <doctest.h>

#include <bit>
#include <stdexcept>

#include "subcheck/alt_set.hpp"

using subcheck::AltSet;

TEST_CASE("basic membership and cardinality") {
    AltSet s(10);
    CHECK(s.empty());
    CHECK(s.count() == 0);
    s.set(0);
    s.set(7);
    s.set(9);
    CHECK(s.test(0));
    CHECK(s.test(7));
    CHECK(!s.test(3));
    CHECK(s.count() == 3);
    s.reset(7);
    CHECK(!s.test(7));
    CHECK(s.count() == 2);
    CHECK_THROWS_AS(s.set(10), std::out_of_range);
}

TEST_CASE("construction helpers agree") {
    const auto a = AltSet::of(6, {1, 4});
    const auto b = AltSet::from_mask(6, 0b010010);
    CHECK(a == b);
    CHECK(a.to_mask() == 0b010010);
    CHECK(a.elements() == std::vector<std::uint32_t>{1, 4});
}

TEST_CASE("set algebra matches mask arithmetic exhaustively for m = 4") {
    const std::uint32_t m = 4;
    for (std::uint64_t am = 0; am < 16; ++am) {
        for (std::uint64_t bm = 0; bm < 16; ++bm) {
            const auto a = AltSet::from_mask(m, am);
            const auto b = AltSet::from_mask(m, bm);
            CHECK((a | b).to_mask() == (am | bm));
            CHECK((a & b).to_mask() == (am & bm));
            CHECK((a - b).to_mask() == (am & ~bm));
            CHECK(a.is_subset_of(b) == ((am & ~bm) == 0));
            CHECK(a.intersects(b) == ((am & bm) != 0));
            // union contains both operands; difference misses the subtrahend
            CHECK(a.is_subset_of(a | b));
            CHECK(((a - b) & b).empty());
            // inclusion-exclusion
            CHECK((a | b).count() + (a & b).count() == a.count() + b.count());
        }
    }
}

TEST_CASE("value order matches mask order for one word") {
    for (std::uint64_t am = 0; am < 16; ++am)
        for (std::uint64_t bm = 0; bm < 16; ++bm)
            CHECK((AltSet::from_mask(4, am) < AltSet::from_mask(4, bm)) == (am < bm));
}

TEST_CASE("multi-word universes") {
    const std::uint32_t m = 130;
    AltSet s(m);
    CHECK(s.word_count() == 3);
    s.set(0);
    s.set(63);
    s.set(64);
    s.set(129);
    CHECK(s.count() == 4);
    CHECK(s.elements() == std::vector<std::uint32_t>{0, 63, 64, 129});

    AltSet t(m);
    t.set(64);
    CHECK(t.is_subset_of(s));
    CHECK(!s.is_subset_of(t));
    CHECK((s - t).count() == 3);
    CHECK((s & t) == t);
    CHECK((s | t) == s);
    CHECK(t.sole_element() == 64u);
    CHECK(s.sole_element() == std::nullopt);
    CHECK(s.first() == 0u);
    CHECK((s - AltSet::of(m, {0})).first() == 63u);

    AltSet high(m);
    high.set(129);
    CHECK(high.sole_element() == 129u);
    CHECK(high.with(5).sole_element() == std::nullopt);
}

TEST_CASE("empty universe") {
    AltSet s(0);
    CHECK(s.empty());
    CHECK(s.word_count() == 0);
    CHECK(s.is_subset_of(AltSet(0)));
    CHECK(s == AltSet(0));
}

TEST_CASE("sole_element edge cases") {
    CHECK(AltSet(8).sole_element() == std::nullopt);
    CHECK(AltSet::of(8, {3}).sole_element() == 3u);
    CHECK(AltSet::of(8, {3, 4}).sole_element() == std::nullopt);
    CHECK(AltSet::of(70, {0, 69}).sole_element() == std::nullopt);
}
