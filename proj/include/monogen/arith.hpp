#pragma once
// Integer number theory: valuations, factorization, Bezout pairs and the
// count of monic irreducible polynomials over a prime field.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace monogen {

using Integer = mpz_class;

namespace arith {

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// value = sign * prod(prime^exponent); primes strictly ascending.
struct IntFactorization {
    Integer value;
    std::vector<PrimePower> factors;

    int sign() const { return sgn(value); }
    std::vector<Integer> primes() const;
    // Exponent of q in value, 0 when q is not listed.
    unsigned exponent_of(const Integer& q) const;
    std::string to_string() const;
};

// Largest k with p^k | m. Throws for m = 0.
unsigned padic_valuation(const Integer& p, const Integer& m);

struct StableNu {
    unsigned value = 0;
    // Set when the valuation exceeds the cap; value then holds the cap.
    bool capped = false;
};

// nu_p(m^(p-1) - 1) for an odd prime p not dividing m, found by testing
// m^(p-1) = 1 modulo increasing powers of p. m^(p-1) is never formed.
StableNu nu_stable(const Integer& p, const Integer& m, unsigned cap = 64);

bool is_prime(const Integer& n);

// Complete factorization of |n| with the sign kept in value. Trial division
// below 10^6, then Brent-Pollard rho driven by `seed`.
IntFactorization factorize(const Integer& n, std::uint64_t seed = 0);

// Throws when |a| <= 1.
bool is_squarefree(const Integer& a);

struct BezoutPair {
    Integer t;
    Integer s;
};

// u*t - n*s = 1 with 1 <= t <= n minimal. Throws unless gcd(u, n) = 1.
BezoutPair bezout_positive(const Integer& u, const Integer& n);

int mobius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Number of monic irreducible polynomials of degree d over F_p.
Integer count_irreducibles(std::uint64_t p, std::uint64_t d);

// r with r^k = m exactly (sign respected for odd k), if one exists.
std::optional<Integer> exact_root(const Integer& m, unsigned long k);

}  // namespace arith
}  // namespace monogen
