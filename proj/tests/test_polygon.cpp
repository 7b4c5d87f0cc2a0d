#include <doctest.h>

#include <random>
#include <set>

#include "monogen/error.hpp"
#include "monogen/polygon.hpp"

using namespace monogen;
using namespace monogen::polygon;

namespace {

std::vector<LatticePoint> random_cloud(std::mt19937_64& rng) {
    const std::int64_t len = 1 + static_cast<std::int64_t>(rng() % 12);
    std::vector<LatticePoint> pts;
    for (std::int64_t x = 0; x <= len; ++x)
        if (x == 0 || x == len || rng() % 3 != 0) pts.push_back({x, static_cast<std::int64_t>(rng() % 9)});
    pts.back().y = 0;
    return pts;
}

// Lattice points with x >= 1, y >= 1 on or under the polygon, counted by
// exact rational comparison.
std::uint64_t brute_index(const PrincipalPolygon& poly) {
    std::uint64_t count = 0;
    for (std::int64_t x = 1; x <= poly.total_length() + (poly.empty() ? 0 : poly.vertices.front().x); ++x)
        for (std::int64_t y = 1; y <= 64; ++y) {
            for (const auto& s : poly.sides) {
                if (x <= s.start.x || x > s.end.x) continue;
                // y <= start.y - height (x - start.x) / length
                if (y * s.length() <= s.start.y * s.length() - s.height() * (x - s.start.x)) ++count;
            }
        }
    return count;
}

}  // namespace

TEST_CASE("golden x^4 - 17 at p = 2 in phi = x - 1") {
    const auto exp = phi_expand(IntPoly::binomial(4, 17), IntPoly::parse("x - 1"));
    REQUIRE(exp.parts.size() == 5);
    const std::vector<long> want{-16, 4, 6, 4, 1};
    for (std::size_t i = 0; i < 5; ++i) CHECK(exp.parts[i] == IntPoly::constant(want[i]));
    const auto poly = principal_polygon(exp, 2);
    CHECK(poly.vertices == std::vector<LatticePoint>{{0, 4}, {1, 2}, {2, 1}, {4, 0}});
    REQUIRE(poly.sides.size() == 3);
    CHECK(poly.sides[0].slope() == std::pair<std::int64_t, std::int64_t>{-2, 1});
    CHECK(poly.sides[2].slope() == std::pair<std::int64_t, std::int64_t>{-1, 2});
    CHECK(poly.sides[2].ramification() == 2);
    CHECK(polygon_index(poly, 1) == 3);
    for (const auto& s : poly.sides) {
        const auto res = residual_polynomial(exp, s, 2);
        CHECK(res.poly.degree() == s.degree());
    }
}

TEST_CASE("phi-adic expansion reconstructs its input") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 80; ++i) {
        std::vector<Integer> c(2 + rng() % 15);
        for (auto& x : c) x = static_cast<long>(rng() % 2001) - 1000;
        const IntPoly f(c);
        std::vector<Integer> pc(2 + rng() % 3);
        for (auto& x : pc) x = static_cast<long>(rng() % 11) - 5;
        pc.back() = 1;
        const IntPoly phi(pc);
        const auto exp = phi_expand(f, phi);
        CHECK(exp.reconstruct() == f);
        for (const auto& part : exp.parts) CHECK(part.degree() < phi.degree());
    }
    CHECK_THROWS_AS(phi_expand(IntPoly::x(), IntPoly::parse("2x + 1")), Error);
    CHECK_THROWS_AS(phi_expand(IntPoly::x(), IntPoly::constant(1)), Error);
}

TEST_CASE("hull properties on random clouds") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 500; ++i) {
        const auto pts = random_cloud(rng);
        const auto poly = principal_hull(pts);
        const std::set<LatticePoint> input(pts.begin(), pts.end());
        for (const auto& v : poly.vertices) CHECK(input.count(v) == 1);
        for (const auto& pt : pts) CHECK(poly.dominates(pt));
        for (std::size_t k = 0; k < poly.sides.size(); ++k) {
            const auto& s = poly.sides[k];
            CHECK(s.height() > 0);
            CHECK(s.length() > 0);
            if (k > 0) {
                // strictly increasing slopes: h_k / l_k < h_{k-1} / l_{k-1}
                const auto& prev = poly.sides[k - 1];
                CHECK(s.height() * prev.length() < prev.height() * s.length());
            }
        }
        if (!poly.empty()) {
            CHECK(poly.vertices.front().x == pts.front().x);
            CHECK(poly.vertices.back().y == 0);
        }
        CHECK(polygon_index(poly, 1) == brute_index(poly));
        CHECK(polygon_index(poly, 3) == 3 * brute_index(poly));
    }
}

TEST_CASE("edge cases of the principal part") {
    CHECK(principal_hull({}).empty());
    CHECK(principal_hull({{0, 0}, {3, 0}}).empty());
    CHECK(principal_hull({{0, 0}, {2, 3}}).empty());
    const auto single = principal_hull({{0, 1}, {1, 1}, {3, 0}});
    REQUIRE(single.sides.size() == 1);
    CHECK(single.sides[0].degree() == 1);
    const auto collinear = principal_hull({{0, 2}, {1, 1}, {2, 0}});
    REQUIRE(collinear.sides.size() == 1);
    CHECK(collinear.sides[0].degree() == 2);
}

TEST_CASE("Eisenstein polynomials have a single side") {
    const auto exp = phi_expand(IntPoly::parse("x^3 - 2"), IntPoly::x());
    const auto poly = principal_polygon(exp, 2);
    REQUIRE(poly.sides.size() == 1);
    CHECK(poly.sides[0].start == LatticePoint{0, 1});
    CHECK(poly.sides[0].end == LatticePoint{3, 0});
    CHECK(polygon_index(poly, 1) == 0);
}

TEST_CASE("principal_polygon preconditions") {
    CHECK_THROWS_AS(principal_polygon(phi_expand(IntPoly::parse("x^2 + 1"), IntPoly::parse("x^2 + 1")), 3), Error);
    CHECK_THROWS_AS(principal_polygon(phi_expand(IntPoly::parse("x^4 - 17"), IntPoly::parse("x^2 + 1")), 2), Error);
}
