#include "monogen/fppoly.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "monogen/detail/factorization.hpp"
#include "monogen/error.hpp"
#include "monogen/simd/kernels.hpp"

namespace monogen::fp {

Residue mul_mod(Residue a, Residue b, Residue p) {
    return static_cast<Residue>(std::uint64_t(a) * b % p);
}

Residue pow_mod(Residue a, std::uint64_t e, Residue p) {
    std::uint64_t result = 1 % p, base = a % p;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<Residue>(result);
}

Residue inv_mod(Residue a, Residue p) {
    if (a % p == 0) throw Error("zero has no inverse modulo p");
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return static_cast<Residue>(t);
}

Residue reduce(const Integer& v, Residue p) {
    return static_cast<Residue>(mpz_fdiv_ui(v.get_mpz_t(), p));
}

namespace {

// Deterministic Miller-Rabin for 32-bit moduli (bases 2, 7, 61).
bool is_word_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 7u, 61u}) {
        if (a % n == 0) continue;
        std::uint64_t x = pow_mod(static_cast<Residue>(a % n), d, static_cast<Residue>(n));
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void check_modulus(Residue p) {
    thread_local Residue last_checked = 0;
    if (p == last_checked) return;
    if (p >= kMaxModulus || !is_word_prime(p)) throw Error("modulus must be a prime below 2^31");
    last_checked = p;
}

}  // namespace

FpPoly::FpPoly(Residue p) : p_(p) { check_modulus(p); }

FpPoly::FpPoly(Residue p, std::vector<Residue> coeffs) : FpPoly(p) {
    c_ = std::move(coeffs);
    for (Residue v : c_)
        if (v >= p_) throw Error("coefficient not reduced modulo p");
    trim();
}

FpPoly FpPoly::constant(Residue p, Residue c) { return FpPoly(p, {c % p}); }

FpPoly FpPoly::monomial(Residue p, Residue c, std::size_t k) {
    std::vector<Residue> v(k + 1, 0);
    v[k] = c % p;
    return FpPoly(p, std::move(v));
}

FpPoly FpPoly::from_integers(Residue p, std::span<const Integer> coeffs) {
    std::vector<Residue> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.push_back(reduce(c, p));
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FpPoly::check_same_field(const FpPoly& o) const {
    if (p_ != o.p_) throw Error("modulus mismatch");
}

Residue FpPoly::eval(Residue v) const {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * v + *it) % p_;
    return static_cast<Residue>(acc);
}

std::string FpPoly::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        Residue c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c != 1 || i == 0) os << c;
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
    check_same_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    simd::add_mod(std::span(c_).first(o.c_.size()), o.c_, p_);
    trim();
    return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
    check_same_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    simd::sub_mod(std::span(c_).first(o.c_.size()), o.c_, p_);
    trim();
    return *this;
}

FpPoly& FpPoly::operator*=(Residue c) {
    simd::scale_mod(c_, c % p_, p_);
    trim();
    return *this;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    a.check_same_field(b);
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
    std::vector<Residue> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        simd::axpy_mod(std::span(out).subspan(i, b.c_.size()), b.c_, a.c_[i], a.p_);
    }
    return FpPoly(a.p_, std::move(out));
}

std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b) {
    if (a.modulus() != b.modulus()) throw Error("modulus mismatch");
    if (b.is_zero()) throw Error("division by zero polynomial");
    const Residue p = a.modulus();
    if (a.degree() < b.degree()) return {FpPoly(p), a};
    std::vector<Residue> r(a.coeffs().begin(), a.coeffs().end());
    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const Residue inv = inv_mod(b.leading(), p);
    std::vector<Residue> q(r.size() - db, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        Residue c = mul_mod(r[k + db], inv, p);
        q[k] = c;
        if (c == 0) continue;
        simd::axpy_mod(std::span(r).subspan(k, db + 1), bc, p - c, p);
    }
    r.resize(db);
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly rem(const FpPoly& a, const FpPoly& b) { return divrem(a, b).second; }

FpPoly monic(const FpPoly& f) {
    if (f.is_zero() || f.is_monic()) return f;
    FpPoly g = f;
    g *= inv_mod(f.leading(), f.modulus());
    return g;
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

FpPoly derivative(const FpPoly& f) {
    const Residue p = f.modulus();
    if (f.degree() <= 0) return FpPoly(p);
    std::vector<Residue> d(static_cast<std::size_t>(f.degree()));
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        d[i - 1] = mul_mod(f.coeffs()[i], static_cast<Residue>(i % p), p);
    return FpPoly(p, std::move(d));
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return rem(a * b, m); }

FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m) {
    if (e < 0) throw Error("negative exponent");
    FpPoly result = rem(FpPoly::constant(m.modulus(), 1), m);
    FpPoly b = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
    }
    return result;
}

FpPoly power(const FpPoly& base, unsigned e) {
    FpPoly result = FpPoly::constant(base.modulus(), 1);
    FpPoly b = base;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

FpPoly invmod(const FpPoly& a, const FpPoly& m) {
    const Residue p = m.modulus();
    FpPoly r0 = m, r1 = rem(a, m);
    FpPoly s0(p), s1 = FpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        FpPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw Error("polynomial not invertible modulo m");
    s0 *= inv_mod(r0.leading(), p);
    return rem(s0, m);
}

bool canonical_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                        b.coeffs().rend());
}

FpPoly pth_root(const FpPoly& f) {
    const Residue p = f.modulus();
    std::vector<Residue> out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(f.coeffs()[i]);
    return FpPoly(p, std::move(out));
}

FpPoly random_poly_like(const FpPoly& f, long degree_bound, std::mt19937_64& rng) {
    const Residue p = f.modulus();
    std::vector<Residue> v(static_cast<std::size_t>(std::max(degree_bound, 0L)));
    for (auto& c : v) c = static_cast<Residue>(rng() % p);
    return FpPoly(p, std::move(v));
}

FpPoly FactorMultiset::product(Residue p) const {
    FpPoly acc = FpPoly::constant(p, unit);
    for (const auto& fp : factors) acc = acc * power(fp.factor, fp.multiplicity);
    return acc;
}

FactorMultiset factor(const FpPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error("cannot factor the zero polynomial");
    FactorMultiset out;
    out.unit = f.leading();
    for (auto& pp : detail::factor_monic(monic(f), seed))
        out.factors.push_back({std::move(pp.poly), pp.multiplicity});
    return out;
}

bool is_separable(const FpPoly& f) {
    if (f.is_zero()) throw Error("separability of the zero polynomial");
    return gcd(f, derivative(f)).degree() == 0;
}

bool is_irreducible(const FpPoly& f) { return detail::irreducible(f); }

std::uint64_t count_degree_d_factors(Residue p, std::uint64_t d, std::uint64_t u,
                                     const Integer& m) {
    if (d == 0 || u == 0) throw Error("degree and exponent must be positive");
    check_modulus(p);
    const Residue a = reduce(m, p);
    if (a == 0) return d == 1 ? 1 : 0;  // x^u has the single factor x
    // x^u - a = (x^u' - a)^(p^k) in F_p[x] since a^p = a.
    std::uint64_t reduced = u;
    while (reduced % p == 0) reduced /= p;

    // Roots of the separable x^u' - a in F_{p^e}: gcd(u', p^e - 1) of them
    // when a is a gcd-th power there, else none.
    auto roots_in = [&](std::uint64_t e) -> Integer {
        Integer qe;
        mpz_ui_pow_ui(qe.get_mpz_t(), p, e);
        Integer order = qe - 1;
        Integer g = gcd(order, Integer(std::to_string(reduced)));
        Integer cofactor = order / g;
        Integer exponent = cofactor % (p - 1);
        return pow_mod(a, exponent.get_ui(), p) == 1 ? g : Integer(0);
    };
    Integer exact = 0;
    for (std::uint64_t e : arith::divisors(d)) {
        int mu = arith::mobius(d / e);
        if (mu != 0) exact += mu * roots_in(e);
    }
    return Integer(exact / Integer(std::to_string(d))).get_ui();
}

}  // namespace monogen::fp
