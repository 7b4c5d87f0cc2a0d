#pragma once
// Dense polynomials over a word-sized prime field F_p, p < 2^31.
//
// Coefficient vectors are little-endian (index = exponent) and never carry
// trailing zeros. The inner loops of multiplication and division run on the
// residue kernels in simd/kernels.hpp.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monogen/arith.hpp"

namespace monogen::fp {

using Residue = std::uint32_t;

// Largest supported modulus (exclusive).
inline constexpr std::uint64_t kMaxModulus = std::uint64_t(1) << 31;

Residue mul_mod(Residue a, Residue b, Residue p);
Residue pow_mod(Residue a, std::uint64_t e, Residue p);
// Throws on a = 0.
Residue inv_mod(Residue a, Residue p);
// Least nonnegative residue of an arbitrary integer.
Residue reduce(const Integer& v, Residue p);

class FpPoly {
public:
    // The zero polynomial. Throws unless p is a prime below 2^31.
    explicit FpPoly(Residue p);
    // Coefficients must already be reduced.
    FpPoly(Residue p, std::vector<Residue> coeffs);

    static FpPoly constant(Residue p, Residue c);
    static FpPoly monomial(Residue p, Residue c, std::size_t k);
    static FpPoly x(Residue p) { return monomial(p, 1, 1); }
    // Reduces arbitrary integer coefficients into [0, p).
    static FpPoly from_integers(Residue p, std::span<const Integer> coeffs);

    Residue modulus() const { return p_; }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Residue leading() const { return c_.empty() ? 0 : c_.back(); }
    std::span<const Residue> coeffs() const { return c_; }

    Residue eval(Residue v) const;
    std::string to_string(char var = 'x') const;

    FpPoly& operator+=(const FpPoly& o);
    FpPoly& operator-=(const FpPoly& o);
    FpPoly& operator*=(Residue c);

    friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
    friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly&, const FpPoly&) = default;

private:
    void trim();
    void check_same_field(const FpPoly& o) const;

    Residue p_;
    std::vector<Residue> c_;
};

// Quotient and remainder with deg(rem) < deg(b). Throws on b = 0.
std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b);
FpPoly rem(const FpPoly& a, const FpPoly& b);
FpPoly monic(const FpPoly& f);
// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& a, const FpPoly& b);
FpPoly derivative(const FpPoly& f);
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m);
FpPoly power(const FpPoly& base, unsigned e);
// Extended Euclid: returns s with s*a = 1 mod m; throws if not invertible.
FpPoly invmod(const FpPoly& a, const FpPoly& m);

// Ordering used to list factors deterministically: by degree, then by
// coefficients from the top down.
bool canonical_less(const FpPoly& a, const FpPoly& b);

template <class Poly>
struct FactorPower {
    Poly factor;
    unsigned multiplicity = 0;
};

// Monic irreducible factors with multiplicities, in canonical order.
// `unit` is the leading coefficient of the input.
struct FactorMultiset {
    Residue unit = 1;
    std::vector<FactorPower<FpPoly>> factors;

    // unit * prod(factor^multiplicity)
    FpPoly product(Residue p) const;
};

// Squarefree decomposition, distinct-degree splitting, then Cantor-Zassenhaus
// equal-degree splitting driven by `seed`. Throws on f = 0.
FactorMultiset factor(const FpPoly& f, std::uint64_t seed = 0);

bool is_separable(const FpPoly& f);
bool is_irreducible(const FpPoly& f);

// Number of distinct monic irreducible degree-d factors of x^u - m in F_p[x].
// Counted from the roots of x^u - m in each F_{p^e}, e | d, so x^u is never
// expanded; stays cheap for large u.
std::uint64_t count_degree_d_factors(Residue p, std::uint64_t d, std::uint64_t u, const Integer& m);

// Hooks shared with the generic factorization templates.
inline FpPoly one_like(const FpPoly& f) { return FpPoly::constant(f.modulus(), 1); }
inline FpPoly x_like(const FpPoly& f) { return FpPoly::x(f.modulus()); }
inline Integer field_order(const FpPoly& f) { return Integer(f.modulus()); }
inline Residue field_characteristic(const FpPoly& f) { return f.modulus(); }
inline unsigned field_degree(const FpPoly&) { return 1; }
FpPoly pth_root(const FpPoly& f);
FpPoly random_poly_like(const FpPoly& f, long degree_bound, std::mt19937_64& rng);

}  // namespace monogen::fp
