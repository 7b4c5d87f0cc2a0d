#include <doctest.h>

#include <random>

#include "monogen/error.hpp"
#include "monogen/intpoly.hpp"
#include "monogen/purefield.hpp"

using namespace monogen;

namespace {

IntPoly random_poly(std::mt19937_64& rng, long degree, bool monic) {
    std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = static_cast<long>(rng() % 61) - 30;
    if (monic) c.back() = 1;
    return IntPoly(c);
}

}  // namespace

TEST_CASE("parsing and printing") {
    CHECK(IntPoly::parse("x^4 - 17") == IntPoly::binomial(4, 17));
    CHECK(IntPoly::parse("x^2+2x+2").to_string() == "x^2 + 2x + 2");
    CHECK(IntPoly::parse(" 3*x^3 - x + 1 ").to_string() == "3x^3 - x + 1");
    CHECK(IntPoly::parse("-x").to_string() == "-x");
    CHECK(IntPoly::parse("x - x").is_zero());
    CHECK(IntPoly::parse("7").to_string() == "7");
    CHECK_THROWS_AS(IntPoly::parse(""), Error);
    CHECK_THROWS_AS(IntPoly::parse("x^"), Error);
    CHECK_THROWS_AS(IntPoly::parse("2x 3"), Error);
    CHECK_THROWS_AS(IntPoly::parse("*x"), Error);

    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
        const auto f = random_poly(rng, static_cast<long>(rng() % 9), false);
        CHECK(IntPoly::parse(f.to_string()) == f);
    }
}

TEST_CASE("monic division and valuations") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        const auto a = random_poly(rng, static_cast<long>(rng() % 12), false);
        const auto b = random_poly(rng, 1 + static_cast<long>(rng() % 4), true);
        auto [q, r] = divrem_monic(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(divrem_monic(IntPoly::x(), IntPoly::parse("2x + 1")), Error);
    CHECK(IntPoly::parse("12x^2 + 18").valuation(3) == 1);
    CHECK(IntPoly::parse("12x^2 + 18").valuation(2) == 1);
    CHECK_THROWS_AS(IntPoly().valuation(2), Error);
    CHECK(IntPoly::parse("4x + 6").exact_div(2) == IntPoly::parse("2x + 3"));
    CHECK_THROWS_AS(IntPoly::parse("4x + 6").exact_div(4), Error);
}

TEST_CASE("resultant and discriminant") {
    CHECK(discriminant(IntPoly::parse("x^2 + 3x + 1")) == 5);
    CHECK(discriminant(IntPoly::parse("x^3 - 2")) == -108);
    CHECK(discriminant(IntPoly::parse("x^2 - 2x + 1")) == 0);
    CHECK(resultant(IntPoly::parse("x - 2"), IntPoly::parse("x^2 + 1")) == 5);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const auto a = random_poly(rng, 1 + static_cast<long>(rng() % 5), true);
        const auto b = random_poly(rng, 1 + static_cast<long>(rng() % 5), true);
        // res(a, b) = (-1)^(deg a deg b) res(b, a)
        const long sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
        CHECK(resultant(a, b) == sign * resultant(b, a));
        // disc(ab) = disc(a) disc(b) res(a, b)^2
        const Integer r = resultant(a, b);
        CHECK(discriminant(a * b) == discriminant(a) * discriminant(b) * r * r);
    }
}

TEST_CASE("binomial discriminant closed form matches the resultant") {
    for (std::uint64_t n = 2; n <= 9; ++n)
        for (long a : {-30L, -7L, -2L, 2L, 3L, 6L, 10L, 17L}) {
            CHECK(discriminant(IntPoly::binomial(n, a)) == purefield::binomial_discriminant(n, a));
        }
    CHECK(purefield::binomial_discriminant(2, 5) == 20);
    CHECK(purefield::binomial_discriminant(3, 2) == -108);
    CHECK(purefield::binomial_discriminant(6, 30) > 0);
}

TEST_CASE("reduction and lifting") {
    const auto f = IntPoly::parse("x^3 - 5x + 7");
    const auto fbar = f.reduce(3);
    CHECK(fbar == fp::FpPoly(3, {1, 1, 0, 1}));
    CHECK(IntPoly::lift(fbar) == IntPoly::parse("x^3 + x + 1"));
    CHECK(f.eval(2) == 5);
    CHECK(derivative(f) == IntPoly::parse("3x^2 - 5"));
    CHECK(power(IntPoly::parse("x + 1"), 3) == IntPoly::parse("x^3 + 3x^2 + 3x + 1"));
}
