#include "monogen/purefield.hpp"

#include <algorithm>
#include <numeric>

#include "monogen/error.hpp"

namespace monogen::purefield {
namespace {

Integer to_integer(std::uint64_t v) {
    Integer out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (out > UINT64_MAX / base) throw Error("exponent n does not fit in 64 bits");
        out *= base;
    }
    return out;
}

Integer ipow(const Integer& b, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

bool congruent_one(const Integer& m, unsigned long e, const Integer& modulus) {
    Integer base = m % modulus;
    if (base < 0) base += modulus;
    Integer r;
    const Integer ex = to_integer(e);
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), ex.get_mpz_t(), modulus.get_mpz_t());
    return r == 1;
}

}  // namespace

bool binomial_irreducible(std::uint64_t n, const Integer& m) {
    if (n < 1) throw Error("n must be positive");
    if (abs(m) < 2) throw Error("|m| >= 2 required");
    for (const auto& q : arith::factorize(to_integer(n)).primes()) {
        if (arith::exact_root(m, q.get_ui())) return false;
    }
    if (n % 4 == 0 && m < 0 && m % 4 == 0) {
        if (arith::exact_root(Integer(-m / 4), 4)) return false;
    }
    return true;
}

PureFieldSpec PureFieldSpec::make(std::uint64_t n, const Integer& m) {
    if (n < 3) throw Error("n >= 3 required");
    if (abs(m) < 2) throw Error("|m| >= 2 required");
    if (!binomial_irreducible(n, m)) throw Error("x^n - m is reducible over Q");
    return {n, m, arith::factorize(to_integer(n)), arith::factorize(m)};
}

ClosedFormData closed_form_polygon(std::uint64_t n, const Integer& m, const Integer& p, const IntPoly& phi) {
    if (p == 2 || !arith::is_prime(p)) throw Error("p must be an odd prime");
    if (n % p.get_ui() != 0) throw Error("p must divide n");
    if (m % p == 0) throw Error("p must not divide m");
    if (!phi.is_monic()) throw Error("phi must be monic");
    const auto pw = static_cast<fp::Residue>(p.get_ui());

    ClosedFormData out;
    out.p = p;
    out.u = n;
    while (out.u % pw == 0) {
        out.u /= pw;
        ++out.r;
    }
    out.phi = phi;

    const IntPoly fu = IntPoly::binomial(out.u, m);
    const fp::FpPoly phi_bar = phi.reduce(pw);
    if (!fp::is_irreducible(phi_bar)) throw Error("phi is not irreducible modulo p");
    auto [ubar, rest] = fp::divrem(fu.reduce(pw), phi_bar);
    if (!rest.is_zero()) throw Error("phi mod p does not divide x^u - m mod p");
    out.U = IntPoly::lift(ubar);
    out.T = (fu - phi * out.U).exact_div(p);
    out.coprime_condition = !fp::rem(ubar * out.T.reduce(pw), phi_bar).is_zero();

    // H = m^(p^r - 1) T + p^-(r+1) sum_{j=0}^{p^r-2} C(p^r, j) m^j (pT)^(p^r - j)
    const std::uint64_t pr = checked_pow(pw, out.r);
    const IntPoly pT = p * out.T;
    IntPoly pT_power = pT;  // (pT)^k for k = 1, 2, ...
    IntPoly sum;
    for (std::uint64_t k = 2; k <= pr; ++k) {
        pT_power = pT_power * pT;
        const std::uint64_t j = pr - k;
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), pr, j);
        sum = sum + (binom * ipow(m, j)) * pT_power;
    }
    out.H = ipow(m, pr - 1) * out.T + sum.exact_div(ipow(p, out.r + 1));
    auto [v, rr] = divrem_monic(out.H, phi);
    out.V = std::move(v);
    out.R = std::move(rr);
    out.A0 = ipow(p, out.r + 1) * out.R + IntPoly::constant(ipow(m, pr) - m);
    if (out.A0.is_zero()) throw Error("A0 vanishes: phi divides x^n - m");
    out.nu0 = out.A0.valuation(p);

    out.points.push_back({0, static_cast<std::int64_t>(out.nu0)});
    for (unsigned j = 0; j <= out.r; ++j)
        out.points.push_back({static_cast<std::int64_t>(checked_pow(pw, j)), static_cast<std::int64_t>(out.r - j)});
    out.hull = polygon::principal_hull(out.points);
    return out;
}

std::optional<MonogenityVerdict> theorem_general_test(std::uint64_t n, const Integer& m, const AnalysisConfig& cfg) {
    if (!binomial_irreducible(n, m)) throw Error("x^n - m is reducible over Q");
    const auto nf = arith::factorize(to_integer(n));
    for (const auto& pp : nf.factors) {
        const Integer& p = pp.prime;
        if (p == 2 || m % p == 0) continue;
        const std::uint64_t pw = p.get_ui();
        const unsigned r = pp.exponent;
        const std::uint64_t u = n / checked_pow(pw, r);
        const auto nu = arith::nu_stable(p, m, cfg.nu_cap);
        const unsigned k = std::min(r + 1, nu.value);
        const Integer ku = Integer(k) * to_integer(u);
        // x^u - m is separable mod p, so no factor has degree above u; and
        // once d * N_p(d) >= k * u no d' >= d can fire since
        // N_p(d', u, m) <= u / d' and d * N_p(d) is nondecreasing.
        std::uint64_t d_max = u;
        if (cfg.d_bound != 0) d_max = std::min(d_max, cfg.d_bound);
        for (std::uint64_t d = 1; d <= d_max; ++d) {
            const Integer irreducibles = arith::count_irreducibles(pw, d);
            if (to_integer(d) * irreducibles >= ku) break;
            const std::uint64_t count = fp::count_degree_d_factors(static_cast<fp::Residue>(pw), d, u, m);
            const Integer lhs = Integer(k) * to_integer(count);
            if (lhs > irreducibles) {
                NotMonogenic verdict{p, d, lhs, irreducibles, TheoremWitness{r, u, nu.value, nu.capped, k, count}};
                return MonogenityVerdict{std::move(verdict), kProvenanceTheorem};
            }
        }
    }
    return std::nullopt;
}

Family parse_family(const std::string& text) {
    if (text == "5-7") return Family::F5_7;
    if (text == "3-11") return Family::F3_11;
    if (text == "5-11") return Family::F5_11;
    throw Error("unknown family '" + text + "' (expected 5-7, 3-11 or 5-11)");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::F5_7: return "5-7";
        case Family::F3_11: return "3-11";
        case Family::F5_11: return "5-11";
    }
    return "?";
}

CorollaryReport corollary_checks(Family family, unsigned r, unsigned s, const Integer& m, const AnalysisConfig& cfg) {
    CorollaryReport rep;
    rep.family = family;
    rep.r = r;
    rep.s = s;
    rep.m = m;
    std::uint64_t base_r = 0, base_s = 0;
    switch (family) {
        case Family::F5_7:
            base_r = 5, base_s = 7;
            if (r >= 1 && s >= 7 && congruent_one(m, 6, ipow(7, 8))) rep.clause = 1;
            else if (r >= 5 && s >= 1 && congruent_one(m, 4, ipow(5, 6))) rep.clause = 2;
            break;
        case Family::F3_11:
            base_r = 3, base_s = 11;
            // The first clause is read as m^10 = 1 (mod 11^12).
            if (r >= 1 && s >= 11 && congruent_one(m, 10, ipow(11, 12))) rep.clause = 1;
            else if (r >= 2 && s >= 1 && congruent_one(m, 2, 27)) rep.clause = 2;
            break;
        case Family::F5_11: {
            Integer res = m % 11;
            if (res < 0) res += 11;
            base_r = 5, base_s = 11;
            if (r >= 1 && s >= 2 && res == 10 && congruent_one(m, 10, 1331)) rep.clause = 1;
            else if (r >= 6 && s >= 1 && congruent_one(m, 4, ipow(5, 6))) rep.clause = 2;
            break;
        }
    }
    rep.hypothesis = rep.clause != 0;
    rep.n = checked_pow(base_r, r);
    const std::uint64_t ns = checked_pow(base_s, s);
    if (rep.n > UINT64_MAX / ns) throw Error("exponent n does not fit in 64 bits");
    rep.n *= ns;

    rep.irreducible = abs(m) >= 2 && binomial_irreducible(rep.n, m);
    if (!rep.irreducible) {
        rep.agrees = !rep.hypothesis;
        rep.note = "x^n - m is reducible; the criterion does not apply";
        return rep;
    }
    rep.firing = theorem_general_test(rep.n, m, cfg);
    rep.theorem_fires = rep.firing.has_value();
    rep.agrees = !rep.hypothesis || rep.theorem_fires;
    if (!rep.agrees) {
        rep.note = "stated hypothesis holds but min{r+1,nu}*N_p(d,u,m) > N_p(d) fails for every odd p | n and d";
    } else if (rep.theorem_fires && !rep.hypothesis) {
        rep.note = "criterion fires outside the stated hypothesis";
    }
    return rep;
}

Integer binomial_discriminant(std::uint64_t n, const Integer& a) {
    if (n < 2) throw Error("n >= 2 required");
    if (a == 0) throw Error("a must be nonzero");
    // disc(x^n + c) = (-1)^(n(n-1)/2) n^n c^(n-1) with c = -a
    Integer d = ipow(to_integer(n), n) * ipow(a, n - 1);
    unsigned parity = static_cast<unsigned>((n * (n - 1) / 2 + (n - 1)) % 2);
    return parity ? Integer(-d) : d;
}

MonogenityVerdict construct_generator(std::uint64_t n, const Integer& a, std::uint64_t u, std::uint64_t seed) {
    if (u < 2) throw Error("u >= 2 required");
    if (n < 2) throw Error("n >= 2 required");
    if (std::gcd(u, n) != 1) throw Error("gcd(u, n) = 1 required");
    if (abs(a) < 2) throw Error("|a| >= 2 required");
    if (!arith::is_squarefree(a)) throw Error("a must be squarefree");
    const auto af = arith::factorize(a, seed);
    for (const auto& q : arith::factorize(to_integer(n)).primes()) {
        if (af.exponent_of(q) == 0) throw Error("every prime divisor of n must divide a");
    }
    for (const auto& q : af.primes()) {
        if (q >= Integer(static_cast<unsigned long>(fp::kMaxModulus)))
            throw Error("prime divisors of a must be below 2^31");
    }

    const auto [t, s] = arith::bezout_positive(to_integer(u), to_integer(n));
    Monogenic out{t, s, a, u, IntPoly::binomial(n, a), {}, {}, 0};
    // Primes dividing (Z_K : Z[theta]) divide disc(G) = +-n^n a^(n-1), hence a.
    for (const auto& q : af.primes()) {
        auto split = ore::ore_split(out.G, q, seed);
        out.generator_checks.push_back({q, split.index_valuation, split.exact});
        if (!split.exact || split.index_valuation != 0)
            throw Error("generator check failed at q = " + q.get_str());
    }
    const Integer& p = af.factors.front().prime;
    auto alpha_split = ore::ore_split(IntPoly::binomial(n, ipow(a, u)), p, seed);
    out.alpha_index = {p, alpha_split.index_valuation, alpha_split.exact};
    out.alpha_index_bound = (n - 1) * (u - 1) / 2;
    return {std::move(out), kProvenanceGenerator};
}

MonogenityVerdict analyze(std::uint64_t n, const Integer& m, const AnalysisConfig& cfg) {
    const auto spec = PureFieldSpec::make(n, m);

    // m = a^u with the generator hypotheses, largest u first.
    unsigned g = 0;
    for (const auto& f : spec.m_factors.factors) g = std::gcd(g, f.exponent);
    auto us = arith::divisors(g);
    for (auto it = us.rbegin(); it != us.rend(); ++it) {
        const std::uint64_t u = *it;
        if (u < 2 || std::gcd(u, n) != 1) continue;
        auto a = arith::exact_root(m, static_cast<unsigned long>(u));
        if (!a || abs(*a) < 2 || !arith::is_squarefree(*a)) continue;
        bool covers = true;
        for (const auto& q : spec.n_factors.primes())
            if (*a % q != 0) covers = false;
        if (!covers) continue;
        return construct_generator(n, *a, u, cfg.seed);
    }

    if (auto fired = theorem_general_test(n, m, cfg)) return *fired;

    Inconclusive inc;
    if (n > cfg.expand_limit) {
        inc.notes.push_back("n = " + std::to_string(n) + " exceeds the direct splitting limit " +
                            std::to_string(cfg.expand_limit));
        return {std::move(inc), kProvenanceNone};
    }
    // Candidate primes divide disc(x^n - m) = +-n^n m^(n-1).
    std::vector<Integer> primes = spec.n_factors.primes();
    for (const auto& q : spec.m_factors.primes()) primes.push_back(q);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    const IntPoly f = IntPoly::binomial(n, m);
    for (const auto& p : primes) {
        if (p >= Integer(static_cast<unsigned long>(fp::kMaxModulus))) {
            inc.notes.push_back("p = " + p.get_str() + " skipped: above the word-size bound");
            continue;
        }
        auto split = ore::ore_split(f, p, cfg.seed);
        if (!split.exact) {
            inc.notes.push_back("p = " + p.get_str() + ": not p-regular, nu_p(ind alpha) >= " +
                                std::to_string(split.index_valuation));
            continue;
        }
        auto cid = ore::common_index_divisor(split);
        if (cid.found) {
            NotMonogenic verdict{p, cid.witness_d, Integer(static_cast<unsigned long>(cid.primes)), cid.irreducibles,
                                 std::nullopt};
            return {std::move(verdict), kProvenanceCommonIndex};
        }
        inc.notes.push_back("p = " + p.get_str() + ": p-regular, no common index divisor");
    }
    return {std::move(inc), kProvenanceNone};
}

}  // namespace monogen::purefield
