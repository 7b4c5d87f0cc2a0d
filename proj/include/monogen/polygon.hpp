#pragma once
// phi-adic developments, principal Newton polygons and residual polynomials.
//
// For F = sum a_j(x) phi(x)^j with deg a_j < deg phi, the cloud of F is the
// set of points (j, nu_p(a_j)) for a_j != 0. The principal polygon is the
// part of its lower convex hull with negative slopes. All hull decisions
// use exact integer arithmetic.

#include <compare>
#include <cstdint>
#include <vector>

#include "monogen/fqpoly.hpp"
#include "monogen/intpoly.hpp"

namespace monogen::polygon {

struct PhiExpansion {
    IntPoly base;
    std::vector<IntPoly> parts;  // a_0, ..., a_l

    IntPoly reconstruct() const;
};

// Throws unless phi is monic of degree >= 1.
PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi);

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// A segment of slope -height/length joining two lattice points.
struct Side {
    LatticePoint start;
    LatticePoint end;

    std::int64_t length() const { return end.x - start.x; }
    std::int64_t height() const { return start.y - end.y; }
    std::int64_t degree() const;
    std::int64_t ramification() const { return length() / degree(); }
    // Slope in lowest terms as (numerator, denominator), denominator > 0.
    std::pair<std::int64_t, std::int64_t> slope() const;
    // Floor of the ordinate of the side above abscissa x.
    std::int64_t floor_at(std::int64_t x) const;

    friend bool operator==(const Side&, const Side&) = default;
};

struct PrincipalPolygon {
    std::vector<LatticePoint> vertices;
    std::vector<Side> sides;  // most negative slope first

    bool empty() const { return sides.empty(); }
    std::int64_t total_length() const;
    // True when (x, y) lies on or above every side over its range.
    bool dominates(const LatticePoint& pt) const;

    friend bool operator==(const PrincipalPolygon&, const PrincipalPolygon&) = default;
};

std::vector<LatticePoint> cloud(const PhiExpansion& exp, const Integer& p);

// Negative-slope part of the lower convex hull of a point set with distinct
// abscissae. Collinear points merge into one side.
PrincipalPolygon principal_hull(std::vector<LatticePoint> points);

// Throws when phi mod p is not irreducible or when a_0 = 0 (phi divides F).
PrincipalPolygon principal_polygon(const PhiExpansion& exp, const Integer& p);

// deg(phi) times the number of lattice points (x, y) with x >= 1, y >= 1 on
// or below the polygon.
std::uint64_t polygon_index(const PrincipalPolygon& poly, unsigned deg_phi);

struct ResidualPolynomial {
    fq::FieldPtr field;  // F_p[t] / (phi mod p)
    Side side;
    fq::FqPoly poly;     // degree = side.degree()
};

ResidualPolynomial residual_polynomial(const PhiExpansion& exp, const Side& side, const Integer& p);

}  // namespace monogen::polygon
