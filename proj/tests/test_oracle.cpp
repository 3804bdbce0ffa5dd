#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

#include "subcheck/checker.hpp"
#include "subcheck/choice.hpp"
#include "subcheck/gen.hpp"
#include "subcheck/oracle.hpp"
#include "support.hpp"

using namespace subcheck;

TEST_CASE("choice table entries on the counterexample") {
    const auto list = support::counterexample4();
    const auto table = full_choice_table(list, 8);
    REQUIRE(table.rank_of.size() == 16);
    CHECK(table.lookup(0b0111) == 0);  // {a,b,c} -> {a,b}
    CHECK(table.lookup(0b1000) == 5);  // {d} -> {}
    CHECK(table.lookup(0b0000) == 5);

    const auto trivial = full_choice_table(support::make_list(2, {0b00}), 8);
    CHECK(trivial.lookup(0b00) == 0);
}

TEST_CASE("both table builds agree and match direct evaluation") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::uint32_t m = 1 + std::uint32_t(seed % 6);
        const auto list = (seed % 2) ? support::random_coherent(m, seed % 19, seed)
                                     : support::random_coherent_any_order(m, 12, seed);
        const auto scan = full_choice_table(list, 8, TableBuild::scan);
        const auto stamp = full_choice_table(list, 8, TableBuild::stamp);
        REQUIRE(scan.rank_of == stamp.rank_of);
        for (std::uint64_t mask = 0; mask < scan.rank_of.size(); ++mask)
            CHECK(scan.lookup(mask) == eval_choice(list, AltSet::from_mask(m, mask)).rank);
    }
}

TEST_CASE("brute force on the counterexample") {
    const auto list = support::counterexample4();
    const auto v = brute_force_check(list, 8);
    CHECK(v.outcome == Outcome::NotSubstitutable);
    REQUIRE(v.violation.has_value());
    CHECK(verify_violation(list, *v.violation));

    // d is chosen from B={a,c,d} but not from A={d}: a violation
    const Violation paper{AltSet::from_mask(4, 0b1000), AltSet::from_mask(4, 0b1101), 3};
    CHECK(verify_violation(list, paper));
}

TEST_CASE("brute force on substitutable and degenerate lists") {
    CHECK(brute_force_check(support::resp3(), 8).outcome == Outcome::Substitutable);
    CHECK(brute_force_check(support::make_list(1, {0b1}), 8).outcome == Outcome::Substitutable);
    CHECK(brute_force_check(support::make_list(2, {0b00}), 8).outcome == Outcome::Substitutable);

    const auto bad = support::make_list(2, {0b01, 0b11});
    CHECK(brute_force_check(bad, 8).outcome == Outcome::NotCoherent);
}

TEST_CASE("witness enumeration on the fixtures") {
    const auto list = support::counterexample4();
    const auto all = enumerate_all_witnesses(list, 8);
    REQUIRE(!all.empty());
    CHECK(all.front() == Witness{0, 4, 1});  // ({a,b}, {c}), b

    bool has_acd_c = false;
    for (const auto& w : all)
        if (w == Witness{1, 4, 3}) has_acd_c = true;  // ({a,c,d}, {c}), d
    CHECK(has_acd_c);
    for (const auto& w : all) CHECK(verify_witness(list, w));

    CHECK(enumerate_all_witnesses(support::resp3(), 8).empty());
    CHECK(enumerate_all_witnesses(support::make_list(2, {0b00}), 8).empty());
}

TEST_CASE("a witness exists exactly when the oracle rejects") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::uint32_t m = 1 + std::uint32_t(seed % 5);
        const auto list = (seed % 2) ? support::random_coherent(m, seed % 17, seed)
                                     : support::random_coherent_any_order(m, 12, seed);
        const bool oracle_rejects = brute_force_check(list, 8).outcome == Outcome::NotSubstitutable;
        CHECK(oracle_rejects == !enumerate_all_witnesses(list, 8).empty());
    }
}

TEST_CASE("every oracle violation induces a witness via (f(B), f(A))") {
    std::size_t negatives = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::uint32_t m = 2 + std::uint32_t(seed % 5);
        const auto list = support::random_coherent_any_order(m, 14, seed);
        const auto v = brute_force_check(list, 8);
        if (v.outcome != Outcome::NotSubstitutable) continue;
        ++negatives;
        const auto& viol = *v.violation;
        const Witness induced{eval_choice(list, viol.b).rank, eval_choice(list, viol.a).rank,
                              viol.x_elem};
        CHECK(verify_witness(list, induced));
    }
    CHECK(negatives > 20);  // the sweep must actually exercise the construction
}

TEST_CASE("oracle guard") {
    const auto big = gen_random_coherent(10, 5, 1);
    CHECK_THROWS_AS(full_choice_table(big, 8), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_check(big, 8), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_all_witnesses(big, 8), std::invalid_argument);
    CHECK(full_choice_table(big, 12).rank_of.size() == 1024);
}

TEST_CASE("oracle limit honors the environment override") {
    const char* old = std::getenv("SUBCHECK_ORACLE_MAX");
    const std::string saved = old ? old : "";

    ::setenv("SUBCHECK_ORACLE_MAX", "12", 1);
    CHECK(default_oracle_max() == 12);
    ::setenv("SUBCHECK_ORACLE_MAX", "99", 1);
    CHECK(default_oracle_max() == 24);  // clamped
    ::setenv("SUBCHECK_ORACLE_MAX", "junk", 1);
    CHECK(default_oracle_max() == 8);
    ::unsetenv("SUBCHECK_ORACLE_MAX");
    CHECK(default_oracle_max() == 8);

    if (old) ::setenv("SUBCHECK_ORACLE_MAX", saved.c_str(), 1);
}
