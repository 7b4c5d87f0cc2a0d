#include <doctest.h>

#include <random>

#include "monogen/error.hpp"
#include "monogen/fqpoly.hpp"

using namespace monogen;
using namespace monogen::fq;

namespace {

FqPoly random_fq_poly(std::mt19937_64& rng, const FieldPtr& k, long degree) {
    std::vector<FpPoly> c;
    for (long i = 0; i <= degree; ++i) {
        std::vector<Residue> rep(k->degree());
        for (auto& x : rep) x = static_cast<Residue>(rng() % k->characteristic());
        c.emplace_back(k->characteristic(), rep);
    }
    return FqPoly(k, c);
}

}  // namespace

TEST_CASE("field construction and arithmetic") {
    CHECK_THROWS_AS(FiniteField(FpPoly(2, {1, 0, 1})), Error);  // x^2 + 1 = (x + 1)^2 over F_2
    CHECK_THROWS_AS(FiniteField(FpPoly(3, {1, 0, 2})), Error);  // not monic
    const auto f4 = make_field(FpPoly(2, {1, 1, 1}));
    CHECK(f4->order() == 4);
    const FqElement t(f4, FpPoly(2, {0, 1}));
    const FqElement one(f4, FpPoly(2, {1}));
    CHECK(t * t * t == one);
    CHECK(t * t.inverse() == one);
    CHECK(t + t == FqElement(f4, FpPoly(2)));

    const auto f9 = make_field(FpPoly(3, {1, 0, 1}));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 30; ++i) {
        FqElement a(f9, FpPoly(3, {static_cast<Residue>(rng() % 3), static_cast<Residue>(rng() % 3)}));
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == FqElement(f9, FpPoly(3, {1})));
        CHECK(FqElement(f9, f9->pow(a.rep(), 9)) == a);
    }
}

TEST_CASE("factorization over extension fields") {
    std::mt19937_64 rng(7);
    const std::vector<FpPoly> moduli{FpPoly(2, {1, 1, 1}), FpPoly(2, {1, 1, 0, 1}), FpPoly(3, {1, 0, 1}),
                                     FpPoly(5, {2, 0, 1}), FpPoly(7, {5, 0, 0, 1})};
    for (const auto& mod : moduli) {
        const auto k = make_field(mod);
        for (int i = 0; i < 15; ++i) {
            FqPoly f = random_fq_poly(rng, k, 1 + static_cast<long>(rng() % 7));
            if (f.degree() < 1) continue;
            if (i % 5 == 0) f = f * f;
            f = monic(f);
            const auto facs = factor(f, rng());
            FqPoly prod(k, std::vector<FpPoly>{FpPoly(k->characteristic(), {1})});
            for (const auto& fac : facs) {
                CHECK(is_irreducible(fac.factor));
                for (unsigned e = 0; e < fac.multiplicity; ++e) prod = prod * fac.factor;
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("x^q - x splits into all linear factors") {
    const auto f4 = make_field(FpPoly(2, {1, 1, 1}));
    std::vector<FpPoly> c(5, FpPoly(2));
    c[4] = FpPoly(2, {1});
    c[1] = FpPoly(2, {1});
    const auto facs = factor(FqPoly(f4, c));
    CHECK(facs.size() == 4);
    for (const auto& f : facs) {
        CHECK(f.factor.degree() == 1);
        CHECK(f.multiplicity == 1);
    }
    CHECK(is_separable(FqPoly(f4, c)));
}

TEST_CASE("irreducible over F_p may split over F_q") {
    // y^2 + 1 over F_9 = F_3[t]/(t^2 + 1) has roots +-t.
    const auto f9 = make_field(FpPoly(3, {1, 0, 1}));
    const FqPoly g(f9, std::vector<FpPoly>{FpPoly(3, {1}), FpPoly(3), FpPoly(3, {1})});
    CHECK_FALSE(is_irreducible(g));
    CHECK(factor(g).size() == 2);
}
