#include <doctest.h>

#include <random>

#include "monogen/error.hpp"
#include "monogen/ore.hpp"

using namespace monogen;
using namespace monogen::ore;

namespace {

std::int64_t degree_sum(const PrimeSplit& split) {
    std::int64_t total = 0;
    for (const auto& s : split.slots) total += s.e * s.f * static_cast<std::int64_t>(s.multiplicity);
    return total;
}

IntPoly random_monic(std::mt19937_64& rng, long degree) {
    std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = static_cast<long>(rng() % 201) - 100;
    c.back() = 1;
    if (c.front() == 0) c.front() = 1;
    return IntPoly(c);
}

}  // namespace

TEST_CASE("x^4 - 17 at 2") {
    const auto split = ore_split(IntPoly::binomial(4, 17), 2);
    CHECK(split.exact);
    CHECK(split.index_valuation == 3);
    REQUIRE(split.branches.size() == 1);
    CHECK(split.branches[0].phi == IntPoly::parse("x + 1"));
    CHECK(split.branches[0].multiplicity == 4);
    REQUIRE(split.slots.size() == 3);
    CHECK(split.slots[0].e == 1);
    CHECK(split.slots[1].e == 1);
    CHECK(split.slots[2].e == 2);
    for (const auto& s : split.slots) CHECK(s.f == 1);
    CHECK(primes_of_degree(split, 1) == 3);
    CHECK(primes_of_degree(split, 2) == 0);
    const auto cid = common_index_divisor(split);
    CHECK(cid.found);
    CHECK(cid.witness_d == 1);
    CHECK(cid.primes == 3);
    CHECK(cid.irreducibles == 2);
}

TEST_CASE("Eisenstein and unramified primes") {
    const auto eis = ore_split(IntPoly::binomial(6, 30), 5);
    REQUIRE(eis.slots.size() == 1);
    CHECK(eis.slots[0].e == 6);
    CHECK(eis.slots[0].f == 1);
    CHECK(eis.index_valuation == 0);

    // x^3 - 2 mod 7 is irreducible: 7 is inert
    const auto inert = ore_split(IntPoly::binomial(3, 2), 7);
    REQUIRE(inert.slots.size() == 1);
    CHECK(inert.slots[0].e == 1);
    CHECK(inert.slots[0].f == 3);
    CHECK(primes_of_degree(inert, 3) == 1);
    CHECK_FALSE(common_index_divisor(inert).found);
}

TEST_CASE("unramified primes mirror the factorization mod p") {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        const auto f = random_monic(rng, 2 + static_cast<long>(rng() % 5));
        const Integer disc = discriminant(f);
        for (long p : {3L, 5L, 7L, 11L, 13L}) {
            if (disc % p == 0) continue;
            const auto split = ore_split(f, p, 1);
            CHECK(split.exact);
            CHECK(split.index_valuation == 0);
            const auto fac = fp::factor(f.reduce(static_cast<fp::Residue>(p)));
            CHECK(split.slots.size() == fac.factors.size());
            for (const auto& s : split.slots) CHECK(s.e == 1);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("ramified primes: degree sum and index bound") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
        const auto f = random_monic(rng, 2 + static_cast<long>(rng() % 6));
        for (long p : {2L, 3L, 5L}) {
            const auto split = ore_split(f, p, 3);
            if (!split.exact) continue;
            CHECK(degree_sum(split) == f.degree());
            const Integer disc = discriminant(f);
            if (disc != 0) CHECK(2 * split.index_valuation <= arith::padic_valuation(p, disc));
        }
    }
}

TEST_CASE("results do not depend on the seed") {
    const auto f = IntPoly::parse("x^6 + 3x^5 - 12x^3 + 9x + 27");
    for (long p : {2L, 3L, 5L}) {
        const auto a = ore_split(f, p, 0);
        const auto b = ore_split(f, p, 12345);
        CHECK(a.index_valuation == b.index_valuation);
        CHECK(a.slots.size() == b.slots.size());
        CHECK(is_p_regular(f, p, 0) == is_p_regular(f, p, 99));
    }
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(ore_split(IntPoly::parse("2x^2 + 1"), 3), Error);
    CHECK_THROWS_AS(ore_split(IntPoly::constant(1), 3), Error);
    CHECK_THROWS_AS(ore_split(IntPoly::binomial(3, 2), 4), Error);
    CHECK_THROWS_AS(ore_split(IntPoly::binomial(3, 2), Integer("4294967311")), Error);
}

TEST_CASE("inexact splits refuse to count") {
    const auto split = ore_split(IntPoly::parse("x^4 + 4"), 2);
    CHECK_FALSE(split.exact);
    CHECK(split.index_valuation >= 2);
    for (const auto& s : split.slots) CHECK_FALSE(s.certain);
    CHECK_THROWS_AS(primes_of_degree(split, 1), Error);
    CHECK_THROWS_AS(common_index_divisor(split), Error);
    CHECK(ore_split(IntPoly::parse("x^4 + 2x^2 + 5"), 2).exact);
}
