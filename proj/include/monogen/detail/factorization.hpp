#pragma once
// Finite-field polynomial factorization shared by F_p[x] and F_q[x].
//
// Poly must provide, through ADL: degree, is_zero, monic, gcd, divrem,
// derivative, mulmod, powmod, pth_root, one_like, x_like, field_order,
// field_characteristic, field_degree, random_poly_like, canonical_less and
// the ring operators.

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "monogen/arith.hpp"

namespace monogen::detail {

template <class Poly>
struct PolyPower {
    Poly poly;
    unsigned multiplicity;
};

template <class Poly>
Poly exact_quotient(const Poly& a, const Poly& b) {
    return divrem(a, b).first;
}

// Pairwise coprime squarefree parts of a monic f with their multiplicities.
template <class Poly>
void squarefree_parts(const Poly& f, unsigned scale, std::vector<PolyPower<Poly>>& out) {
    if (f.degree() <= 0) return;
    Poly d = derivative(f);
    if (d.is_zero()) {
        squarefree_parts(pth_root(f), scale * field_characteristic(f), out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = exact_quotient(f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly part = exact_quotient(w, y);
        if (part.degree() > 0) out.push_back({monic(part), i * scale});
        ++i;
        w = y;
        c = exact_quotient(c, y);
    }
    if (c.degree() > 0) squarefree_parts(pth_root(c), scale * field_characteristic(f), out);
}

// Groups the factors of a monic squarefree f by degree: (product, degree).
template <class Poly>
std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, unsigned>> out;
    const Integer q = field_order(f);
    const Poly x = x_like(f);
    Poly h = x;
    for (unsigned i = 1; 2 * static_cast<long>(i) <= f.degree(); ++i) {
        h = powmod(h, q, f);
        Poly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = exact_quotient(f, g);
            h = divrem(h, f).second;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

// Splits a monic product of distinct irreducibles of common degree d.
template <class Poly>
void equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == static_cast<long>(d)) {
        out.push_back(f);
        return;
    }
    const Integer q = field_order(f);
    const auto p = field_characteristic(f);
    Integer qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
    for (;;) {
        Poly a = random_poly_like(f, f.degree(), rng);
        if (a.degree() <= 0) continue;
        Poly b = [&] {
            if (p != 2) return powmod(a, (qd - 1) / 2, f) - one_like(f);
            // Absolute trace from F_{q^d} down to F_2.
            const unsigned steps = field_degree(f) * d;
            Poly term = divrem(a, f).second;
            Poly acc = term;
            for (unsigned i = 1; i < steps; ++i) {
                term = mulmod(term, term, f);
                acc = acc + term;
            }
            return acc;
        }();
        Poly g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(monic(exact_quotient(f, g)), d, rng, out);
            return;
        }
    }
}

// Monic irreducible factors of f with multiplicity, canonical order.
template <class Poly>
std::vector<PolyPower<Poly>> factor_monic(const Poly& f, std::uint64_t seed) {
    std::vector<PolyPower<Poly>> parts;
    squarefree_parts(f, 1, parts);
    std::mt19937_64 rng(seed);
    std::vector<PolyPower<Poly>> out;
    for (const auto& part : parts) {
        for (const auto& [group, deg] : distinct_degree(part.poly)) {
            std::vector<Poly> pieces;
            equal_degree(monic(group), deg, rng, pieces);
            for (auto& piece : pieces) out.push_back({std::move(piece), part.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(), [](const PolyPower<Poly>& a, const PolyPower<Poly>& b) {
        return canonical_less(a.poly, b.poly);
    });
    return out;
}

// Rabin's test on a polynomial of degree >= 1.
template <class Poly>
bool irreducible(const Poly& f) {
    const long n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const Poly g = monic(f);
    const Integer q = field_order(g);
    const Poly x = x_like(g);
    auto frobenius_power = [&](unsigned long k) {
        Poly h = x;
        for (unsigned long i = 0; i < k; ++i) h = powmod(h, q, g);
        return h;
    };
    if (!(frobenius_power(static_cast<unsigned long>(n)) - x).is_zero()) return false;
    auto fac = arith::factorize(Integer(n));
    for (const auto& pp : fac.factors) {
        unsigned long k = static_cast<unsigned long>(n) / pp.prime.get_ui();
        Poly h = frobenius_power(k) - x;
        if (gcd(h, g).degree() != 0) return false;
    }
    return true;
}

}  // namespace monogen::detail
