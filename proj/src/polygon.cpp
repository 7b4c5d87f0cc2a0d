#include "monogen/polygon.hpp"

#include <algorithm>
#include <numeric>

#include "monogen/error.hpp"

namespace monogen::polygon {
namespace {

// Cross product of (a - o) and (b - o); > 0 for a counter-clockwise turn.
__int128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return static_cast<__int128>(a.x - o.x) * (b.y - o.y) - static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

IntPoly PhiExpansion::reconstruct() const {
    IntPoly acc;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) acc = acc * base + *it;
    return acc;
}

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi) {
    if (phi.degree() < 1) throw Error("phi must have degree >= 1");
    if (!phi.is_monic()) throw Error("phi must be monic");
    PhiExpansion out{phi, {}};
    IntPoly rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = divrem_monic(rest, phi);
        out.parts.push_back(std::move(r));
        rest = std::move(q);
    }
    return out;
}

std::int64_t Side::degree() const { return std::gcd(length(), height()); }

std::pair<std::int64_t, std::int64_t> Side::slope() const {
    const std::int64_t g = degree();
    return {-height() / g, length() / g};
}

std::int64_t Side::floor_at(std::int64_t x) const {
    // y = start.y - height * (x - start.x) / length
    return floor_div(start.y * length() - height() * (x - start.x), length());
}

std::int64_t PrincipalPolygon::total_length() const {
    std::int64_t total = 0;
    for (const auto& s : sides) total += s.length();
    return total;
}

bool PrincipalPolygon::dominates(const LatticePoint& pt) const {
    for (const auto& s : sides) {
        if (pt.x < s.start.x || pt.x > s.end.x) continue;
        if (cross(s.start, s.end, pt) < 0) return false;
    }
    return true;
}

std::vector<LatticePoint> cloud(const PhiExpansion& exp, const Integer& p) {
    std::vector<LatticePoint> pts;
    for (std::size_t j = 0; j < exp.parts.size(); ++j) {
        if (exp.parts[j].is_zero()) continue;
        pts.push_back({static_cast<std::int64_t>(j), static_cast<std::int64_t>(exp.parts[j].valuation(p))});
    }
    return pts;
}

PrincipalPolygon principal_hull(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    PrincipalPolygon out;
    if (points.empty()) return out;
    std::vector<LatticePoint> hull;
    for (const auto& pt : points) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
        hull.push_back(pt);
    }
    // Keep the chain up to the leftmost point of minimal ordinate.
    auto lowest = std::min_element(hull.begin(), hull.end(),
                                   [](const LatticePoint& a, const LatticePoint& b) { return a.y < b.y; });
    hull.erase(lowest + 1, hull.end());
    out.vertices = hull;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) out.sides.push_back({hull[i], hull[i + 1]});
    if (out.sides.empty()) out.vertices.clear();
    return out;
}

PrincipalPolygon principal_polygon(const PhiExpansion& exp, const Integer& p) {
    if (!arith::is_prime(p)) throw Error("p must be prime");
    const auto pw = static_cast<fp::Residue>(p.get_ui());
    if (!fp::is_irreducible(exp.base.reduce(pw))) throw Error("phi is not irreducible modulo p");
    if (exp.parts.empty() || exp.parts.front().is_zero()) throw Error("phi divides F: a_0 = 0");
    return principal_hull(cloud(exp, p));
}

std::uint64_t polygon_index(const PrincipalPolygon& poly, unsigned deg_phi) {
    std::uint64_t count = 0;
    for (const auto& side : poly.sides) {
        // Abscissae in (start.x, end.x]; x = 0 never counts.
        for (std::int64_t x = std::max<std::int64_t>(side.start.x + 1, 1); x <= side.end.x; ++x) {
            std::int64_t y = side.floor_at(x);
            if (y >= 1) count += static_cast<std::uint64_t>(y);
        }
    }
    return count * deg_phi;
}

ResidualPolynomial residual_polynomial(const PhiExpansion& exp, const Side& side, const Integer& p) {
    const auto pw = static_cast<fp::Residue>(p.get_ui());
    auto field = fq::make_field(exp.base.reduce(pw));
    const std::int64_t d = side.degree();
    const std::int64_t e = side.ramification();
    const std::int64_t step = side.height() / d;
    std::vector<fp::FpPoly> coeffs;
    for (std::int64_t k = 0; k <= d; ++k) {
        const auto i = static_cast<std::size_t>(side.start.x + k * e);
        const std::int64_t y_on = side.start.y - k * step;
        fp::FpPoly c(pw);
        if (i < exp.parts.size() && !exp.parts[i].is_zero() &&
            static_cast<std::int64_t>(exp.parts[i].valuation(p)) == y_on) {
            Integer scale;
            mpz_pow_ui(scale.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(y_on));
            c = exp.parts[i].exact_div(scale).reduce(pw);
        }
        coeffs.push_back(std::move(c));
    }
    fq::FqPoly poly(field, std::move(coeffs));
    return {std::move(field), side, std::move(poly)};
}

}  // namespace monogen::polygon
