#include <catch2/catch_amalgamated.hpp>

#include "qspectra/families.hpp"
#include "qspectra/identities.hpp"

using namespace qspectra;

TEST_CASE("a family base cases and recursion") {
    REQUIRE(gen_a(-1) == IntPolynomial{-1});
    REQUIRE(gen_a(0) == IntPolynomial{1});
    REQUIRE(gen_a(1) == IntPolynomial{-1, 1});
    REQUIRE(gen_a(2) == IntPolynomial{1, -3, 1});
    REQUIRE(gen_a(3) == IntPolynomial{-1, 6, -5, 1});
    REQUIRE_THROWS_AS(gen_a(-2), DomainError);
}

TEST_CASE("b family") {
    REQUIRE(gen_b(0) == IntPolynomial{1});
    REQUIRE(gen_b(1) == IntPolynomial{-1, 1});
    REQUIRE(gen_b(2) == IntPolynomial{0, -2, 1});
    REQUIRE(gen_b(3) == IntPolynomial{0, 3, -4, 1});
    REQUIRE_THROWS_AS(gen_b(-1), DomainError);
}

TEST_CASE("c family as printed") {
    REQUIRE(gen_c(0) == IntPolynomial{1});
    REQUIRE(gen_c(1) == IntPolynomial{-2, 1});
    REQUIRE(gen_c(2) == IntPolynomial{1, -3, 1});
    REQUIRE(gen_c(3) == IntPolynomial{1, 3, -4, 1});
    REQUIRE_THROWS_AS(gen_c(-1), DomainError);
}

TEST_CASE("f family") {
    REQUIRE(gen_f(1) == IntPolynomial{1});
    REQUIRE(gen_f(2) == IntPolynomial{0, 1});
    REQUIRE(gen_f(3) == IntPolynomial{1, -2, 1});
    REQUIRE(gen_f(4) == IntPolynomial{0, 4, -4, 1});
    REQUIRE(gen_f(6) == IntPolynomial{0, 9, -24, 22, -8, 1});
    REQUIRE(squarefree_part(gen_f(6)) == IntPolynomial{0, 3, -4, 1});
    REQUIRE_THROWS_AS(gen_f(0), DomainError);
}

TEST_CASE("degrees and monicity up to 40") {
    for (int k = 1; k <= 40; ++k) {
        REQUIRE(gen_a(k).degree() == k);
        REQUIRE(gen_a(k).is_monic());
        REQUIRE(gen_b(k).degree() == k);
        REQUIRE(gen_b(k).is_monic());
        REQUIRE(gen_c(k).degree() == k);
        REQUIRE(gen_c(k).is_monic());
        REQUIRE(gen_f(k).degree() == k - 1);
        REQUIRE(gen_f(k).is_monic());
    }
}

TEST_CASE("odd partial sums are squares") {
    for (int k = 1; k <= 20; ++k) {
        const IntPolynomial ak = gen_a(k);
        REQUIRE(gen_f(2 * k + 1) == ak * ak);
    }
}

TEST_CASE("a_k divides b_{2k+1}") {
    for (int k = 1; k <= 15; ++k) REQUIRE(poly_rem(gen_b(2 * k + 1), gen_a(k)).is_zero());
}

TEST_CASE("fs verdicts") {
    auto reports = check_fs(1, 8);
    REQUIRE(reports.size() == 2);
    const VerdictReport& odd = reports[0];
    const VerdictReport& even = reports[1];
    REQUIRE(odd.identity == "fs-odd");
    REQUIRE(odd.all_hold);
    REQUIRE(odd.records.size() == 4);

    REQUIRE(even.identity == "fs-even");
    REQUIRE_FALSE(even.all_hold);
    for (const IdentityRecord& rec : even.records) REQUIRE_FALSE(rec.holds);

    // Witness at s = 4: f_4 against t*c_2.
    const IdentityRecord& s4 = even.records[1];
    REQUIRE(s4.index == 4);
    REQUIRE(std::get<IntPolynomial>(s4.lhs) == IntPolynomial{0, 4, -4, 1});
    REQUIRE(std::get<IntPolynomial>(s4.rhs) == IntPolynomial{0, 1, -3, 1});
}

TEST_CASE("cp verdicts") {
    auto reports = check_cp(2, 10);
    const VerdictReport& left = reports[0];
    const VerdictReport& right = reports[1];
    REQUIRE(right.all_hold);
    REQUIRE_FALSE(left.all_hold);
    REQUIRE(left.records[0].index == 2);
    REQUIRE(left.records[0].holds);
    for (std::size_t i = 1; i < left.records.size(); ++i) REQUIRE_FALSE(left.records[i].holds);

    // Witness at s = 3.
    REQUIRE(std::get<IntPolynomial>(left.records[1].lhs) == IntPolynomial{0, 1, -3, 1});
    REQUIRE(std::get<IntPolynomial>(left.records[1].rhs) == IntPolynomial{0, 3, -4, 1});
}

TEST_CASE("zero divisibility verdicts") {
    auto reports = check_zero(2, 16);
    REQUIRE(reports.size() == 1);
    REQUIRE(reports[0].all_hold);
    REQUIRE(reports[0].records.size() == 15);
    for (const IdentityRecord& rec : reports[0].records)
        REQUIRE(std::get<IntPolynomial>(rec.lhs).is_zero());
}

TEST_CASE("shift claim holds including the boundary index") {
    auto reports = check_shift_claim(8);
    REQUIRE(reports[0].all_hold);
    // k+1 inner indices per k.
    std::size_t expected = 0;
    for (int k = 1; k <= 8; ++k) expected += static_cast<std::size_t>(k) + 1;
    REQUIRE(reports[0].records.size() == expected);
}

TEST_CASE("ap product is the predicted sign and lambda-independent") {
    auto reports = check_ap(2, 15, {-3, -2, -1, 0, 1, 2, 3});
    REQUIRE(reports[0].all_hold);
    REQUIRE(reports[0].records.size() == 14 * 7);
}

TEST_CASE("fp sign adjudication") {
    auto reports = check_fp(2, 10);
    const VerdictReport& printed = reports[0];
    const VerdictReport& alt = reports[1];
    REQUIRE_FALSE(printed.all_hold);
    for (const IdentityRecord& rec : printed.records) REQUIRE_FALSE(rec.holds);
    REQUIRE(alt.all_hold);

    REQUIRE(std::get<BigInt>(printed.records[0].lhs) == -1);
    REQUIRE(std::get<BigInt>(printed.records[0].rhs) == 1);
}

TEST_CASE("reports are reproducible") {
    REQUIRE(check_fs(1, 6) == check_fs(1, 6));
    REQUIRE(check_ap(2, 6, {0, 1}) == check_ap(2, 6, {0, 1}));
    REQUIRE(check_fp(2, 6) == check_fp(2, 6));
}

TEST_CASE("checker precondition errors") {
    REQUIRE_THROWS_AS(check_fs(0, 3), DomainError);
    REQUIRE_THROWS_AS(check_cp(1, 3), DomainError);
    REQUIRE_THROWS_AS(check_zero(2, 1), DomainError);
    REQUIRE_THROWS_AS(check_shift_claim(0), DomainError);
    REQUIRE_THROWS_AS(check_ap(2, 5, {}), DomainError);
    REQUIRE_THROWS_AS(check_fp(1, 5), DomainError);
}
