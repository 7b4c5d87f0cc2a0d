#include <doctest.h>

#include <random>

#include "monogen/arith.hpp"
#include "monogen/error.hpp"

using namespace monogen;
using namespace monogen::arith;

TEST_CASE("p-adic valuation") {
    CHECK(padic_valuation(2, 48) == 4);
    CHECK(padic_valuation(3, -162) == 4);
    CHECK(padic_valuation(5, 7) == 0);
    CHECK_THROWS_AS(padic_valuation(3, 0), Error);
}

TEST_CASE("stable nu is the valuation of m^(p-1) - 1") {
    CHECK(nu_stable(3, 82).value == 4);
    CHECK(nu_stable(7, Integer(5764800)).value == 8);
    CHECK(nu_stable(5, 2).value == 1);
    const auto capped = nu_stable(3, Integer("1853020188851842"), 5);  // 3^32 + 1
    CHECK(capped.value == 5);
    CHECK(capped.capped);
    CHECK_THROWS_AS(nu_stable(2, 3), Error);
    CHECK_THROWS_AS(nu_stable(3, 6), Error);
    CHECK_THROWS_AS(nu_stable(9, 2), Error);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const unsigned p = std::vector<unsigned>{3, 5, 7, 11, 13}[rng() % 5];
        const long m = static_cast<long>(rng() % 2000) - 1000;
        if (m % static_cast<long>(p) == 0 || std::abs(m) < 2) continue;
        Integer power;
        Integer mm = m;
        mpz_pow_ui(power.get_mpz_t(), mm.get_mpz_t(), p - 1);
        CHECK(nu_stable(p, m).value == padic_valuation(p, power - 1));
    }
}

TEST_CASE("factorization reconstructs its input") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Integer n = Integer(static_cast<unsigned long>(rng() >> 20)) * Integer(static_cast<unsigned long>(rng() >> 30));
        if (i % 3 == 0) n = -n;
        if (n == 0) continue;
        const auto f = factorize(n, 7);
        Integer prod = f.sign() < 0 ? -1 : 1;
        for (const auto& pp : f.factors) {
            CHECK(is_prime(pp.prime));
            Integer pw;
            mpz_pow_ui(pw.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
            prod *= pw;
        }
        CHECK(prod == n);
        CHECK(std::is_sorted(f.factors.begin(), f.factors.end(),
                             [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; }));
    }
    const auto big = factorize(Integer("1000000016000000063"));  // (10^9 + 7)(10^9 + 9)
    REQUIRE(big.factors.size() == 2);
    CHECK(big.factors[0].prime == 1000000007);
    CHECK(big.exponent_of(1000000009) == 1);
    CHECK(factorize(Integer(24300000)).to_string() == "2^5*3^5*5^5");
}

TEST_CASE("squarefree, Bezout, divisors, Moebius") {
    CHECK(is_squarefree(30));
    CHECK(is_squarefree(-6));
    CHECK_FALSE(is_squarefree(12));
    CHECK_THROWS_AS(is_squarefree(1), Error);

    for (auto [u, n] : std::vector<std::pair<long, long>>{{5, 6}, {3, 4}, {5, 6}, {3, 10}, {7, 1}, {2, 9}}) {
        const auto b = bezout_positive(u, n);
        CHECK(b.t > 0);
        CHECK(b.s >= 0);
        CHECK(b.t * u - b.s * n == 1);
    }
    CHECK(bezout_positive(5, 6).t == 5);
    CHECK(bezout_positive(5, 6).s == 4);

    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
}

TEST_CASE("irreducible counts satisfy the Gauss identity") {
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 101u})
        for (std::uint64_t d = 1; d <= 12; ++d) {
            Integer sum = 0;
            for (auto e : divisors(d)) sum += Integer(static_cast<unsigned long>(e)) * count_irreducibles(p, e);
            Integer pd;
            mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
            CHECK(sum == pd);
        }
    CHECK(count_irreducibles(2, 4) == 3);
    CHECK(count_irreducibles(3, 2) == 3);
}

TEST_CASE("exact roots") {
    CHECK(exact_root(27, 3) == Integer(3));
    CHECK(exact_root(-32, 5) == Integer(-2));
    CHECK_FALSE(exact_root(-4, 2).has_value());
    CHECK_FALSE(exact_root(26, 3).has_value());
    CHECK(exact_root(Integer(24300000), 5) == Integer(30));
}
