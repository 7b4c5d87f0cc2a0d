#pragma once
// First-order Ore theorem: prime ideal splitting of p in Z[x]/(F) and the
// p-valuation of the index (Z_K : Z[alpha]) from phi-Newton polygons.

#include <cstdint>
#include <vector>

#include "monogen/polygon.hpp"

namespace monogen::ore {

// One prime ideal candidate: a factor psi of the residual polynomial of a
// side of the phi-polygon.
struct FactorSlot {
    IntPoly phi;
    std::size_t side_index = 0;
    fq::FqPoly residual_factor;
    unsigned multiplicity = 1;
    std::int64_t e = 1;  // ramification index of the side
    std::int64_t f = 1;  // deg(phi) * deg(residual_factor)
    // False when the side's residual polynomial is not separable; such a
    // slot is not a prime ideal claim.
    bool certain = true;
};

struct PhiBranch {
    IntPoly phi;             // lift of an irreducible factor of F mod p, coefficients in [0, p)
                             // except when that lift divides F; then the constant term is raised by p
    unsigned multiplicity;   // exponent of phi mod p in F mod p
    polygon::PhiExpansion expansion;
    polygon::PrincipalPolygon polygon;
    std::vector<polygon::ResidualPolynomial> residuals;
    std::vector<bool> separable;
    std::uint64_t index = 0;
};

struct PrimeSplit {
    Integer p;
    std::vector<PhiBranch> branches;
    std::vector<FactorSlot> slots;
    bool exact = true;  // F is p-regular
    // sum of ind_phi(F): the exact nu_p of the index when exact, a lower
    // bound otherwise.
    std::uint64_t index_valuation = 0;
};

// Throws unless F is monic of degree >= 1 and p is a prime below 2^31.
// Irreducibility of F over Q is the caller's responsibility.
PrimeSplit ore_split(const IntPoly& f, const Integer& p, std::uint64_t seed = 0);

bool is_p_regular(const IntPoly& f, const Integer& p, std::uint64_t seed = 0);

// L_p(d). Throws on an inexact split.
std::uint64_t primes_of_degree(const PrimeSplit& split, std::uint64_t d);

struct CommonIndexDivisor {
    bool found = false;
    std::uint64_t witness_d = 0;  // smallest d with L_p(d) > N_p(d)
    std::uint64_t primes = 0;     // L_p(d)
    Integer irreducibles = 0;     // N_p(d)
};

// Throws on an inexact split.
CommonIndexDivisor common_index_divisor(const PrimeSplit& split);
CommonIndexDivisor common_index_divisor(const IntPoly& f, const Integer& p, std::uint64_t seed = 0);

}  // namespace monogen::ore
