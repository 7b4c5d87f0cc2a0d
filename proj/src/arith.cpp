#include "monogen/arith.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "monogen/error.hpp"

namespace monogen::arith {
namespace {

constexpr std::uint32_t kTrialBound = 1000000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialBound + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialBound; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

Integer random_below(const Integer& n, std::mt19937_64& rng) {
    // Enough 64-bit limbs to exceed n, then reduce; bias is irrelevant here.
    Integer r = 0;
    std::size_t limbs = mpz_sizeinbase(n.get_mpz_t(), 2) / 64 + 2;
    for (std::size_t i = 0; i < limbs; ++i) {
        r <<= 64;
        r += Integer(std::to_string(rng()));
    }
    return r % n;
}

// A nontrivial divisor of the odd composite n (not a perfect power).
Integer brent_rho(const Integer& n, std::mt19937_64& rng) {
    for (;;) {
        Integer y = random_below(n, rng);
        Integer c = random_below(n - 1, rng) + 1;
        Integer g = 1, q = 1, x, ys;
        const unsigned long batch = 128;
        unsigned long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += batch;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(const Integer& n, std::mt19937_64& rng, std::map<Integer, unsigned>& out,
                unsigned multiplicity) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += multiplicity;
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
            if (auto root = exact_root(n, k)) {
                split_into(*root, rng, out, multiplicity * static_cast<unsigned>(k));
                return;
            }
        }
    }
    Integer d = brent_rho(n, rng);
    split_into(d, rng, out, multiplicity);
    split_into(n / d, rng, out, multiplicity);
}

}  // namespace

std::vector<Integer> IntFactorization::primes() const {
    std::vector<Integer> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
}

unsigned IntFactorization::exponent_of(const Integer& q) const {
    for (const auto& f : factors)
        if (f.prime == q) return f.exponent;
    return 0;
}

std::string IntFactorization::to_string() const {
    std::ostringstream os;
    if (sign() < 0) os << "-";
    if (factors.empty()) os << "1";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i].prime.get_str();
        if (factors[i].exponent > 1) os << "^" << factors[i].exponent;
    }
    return os.str();
}

unsigned padic_valuation(const Integer& p, const Integer& m) {
    if (m == 0) throw Error("valuation of zero undefined");
    if (p < 2) throw Error("valuation base must be a prime");
    Integer rest;
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

StableNu nu_stable(const Integer& p, const Integer& m, unsigned cap) {
    if (p == 2) throw Error("nu_stable requires an odd prime");
    if (!is_prime(p)) throw Error("nu_stable requires a prime");
    if (m % p == 0) throw Error("nu_stable requires p not dividing m");
    if (cap == 0) throw Error("nu_stable cap must be positive");

    // Test m^(p-1) = 1 modulo p, p^2, ...; the residue at precision p^(k+1)
    // determines every lower precision, so one modular power per level.
    Integer modulus = p;
    const Integer exponent = p - 1;
    for (unsigned k = 1; k <= cap + 1; ++k) {
        Integer base = m % modulus;
        if (base < 0) base += modulus;
        Integer r;
        mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
        if (r != 1 % modulus) return {k - 1, false};
        modulus *= p;
    }
    return {cap, true};
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

IntFactorization factorize(const Integer& n, std::uint64_t seed) {
    if (n == 0) throw Error("cannot factor zero");
    IntFactorization result;
    result.value = n;
    Integer rest = abs(n);
    std::map<Integer, unsigned> found;
    for (std::uint32_t q : small_primes()) {
        if (Integer(q) * q > rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
                ++e;
            }
            found[Integer(q)] = e;
        }
    }
    if (rest > 1) {
        std::mt19937_64 rng(seed);
        split_into(rest, rng, found, 1);
    }
    for (const auto& [prime, e] : found) result.factors.push_back({prime, e});
    return result;
}

bool is_squarefree(const Integer& a) {
    if (abs(a) <= 1) throw Error("squarefree test requires |a| >= 2");
    auto f = factorize(a);
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

BezoutPair bezout_positive(const Integer& u, const Integer& n) {
    if (u <= 0 || n <= 0) throw Error("bezout_positive requires positive u and n");
    if (gcd(u, n) != 1) throw Error("bezout_positive requires gcd(u, n) = 1");
    Integer t;
    if (n == 1) {
        t = 1;
    } else {
        Integer ur = u % n;
        mpz_invert(t.get_mpz_t(), ur.get_mpz_t(), n.get_mpz_t());
    }
    Integer s = (u * t - 1) / n;
    return {t, s};
}

int mobius(std::uint64_t n) {
    if (n == 0) throw Error("mobius undefined at 0");
    int result = 1;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        n /= q;
        if (n % q == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        small.push_back(i);
        if (i != n / i) large.push_back(n / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Integer count_irreducibles(std::uint64_t p, std::uint64_t d) {
    if (d == 0) throw Error("degree must be positive");
    Integer total = 0;
    for (std::uint64_t e : divisors(d)) {
        int mu = mobius(d / e);
        if (mu == 0) continue;
        Integer pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
        total += mu * pe;
    }
    return total / Integer(std::to_string(d));
}

std::optional<Integer> exact_root(const Integer& m, unsigned long k) {
    if (k == 0) throw Error("root index must be positive");
    if (m < 0 && k % 2 == 0) return std::nullopt;
    Integer r;
    Integer a = abs(m);
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
    if (m < 0) r = -r;
    return r;
}

}  // namespace monogen::arith
