#include "monogen/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "monogen/error.hpp"

namespace monogen {
namespace {

const Integer& zero_integer() {
    static const Integer z = 0;
    return z;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1, 0);
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::binomial(std::size_t n, const Integer& m) {
    std::vector<Integer> v(n + 1, 0);
    v[n] = 1;
    v[0] -= m;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::lift(const fp::FpPoly& f) {
    std::vector<Integer> v;
    for (auto c : f.coeffs()) v.emplace_back(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw Error("empty polynomial");

    std::vector<Integer> coeffs;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw Error("cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail("expected + or -");
        }
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        bool has_digits = i > start;
        Integer c = has_digits ? Integer(s.substr(start, i - start)) : Integer(1);
        std::size_t exponent = 0;
        if (i < s.size() && s[i] == '*') {
            if (!has_digits) fail("dangling '*'");
            ++i;
            if (i >= s.size() || s[i] != 'x') fail("expected x after '*'");
        }
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t estart = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == estart) fail("missing exponent");
                exponent = std::stoul(s.substr(estart, i - estart));
            }
        } else if (!has_digits) {
            fail("empty term");
        }
        if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
        coeffs[exponent] += sign * c;
    }
    return IntPoly(std::move(coeffs));
}

const Integer& IntPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_integer(); }

Integer IntPoly::eval(const Integer& v) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

fp::FpPoly IntPoly::reduce(fp::Residue p) const { return fp::FpPoly::from_integers(p, c_); }

unsigned IntPoly::valuation(const Integer& p) const {
    if (c_.empty()) throw Error("valuation of zero undefined");
    unsigned best = ~0u;
    for (const auto& c : c_)
        if (c != 0) best = std::min(best, arith::padic_valuation(p, c));
    return best;
}

IntPoly IntPoly::exact_div(const Integer& d) const {
    std::vector<Integer> out;
    out.reserve(c_.size());
    for (const auto& c : c_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw Error("inexact coefficient division");
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        out.push_back(std::move(q));
    }
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Integer& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
    std::vector<Integer> out = a.c_;
    for (auto& v : out) v *= c;
    return IntPoly(std::move(out));
}

std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& b) {
    if (!b.is_monic()) throw Error("divisor must be monic");
    if (a.degree() < b.degree()) return {IntPoly(), a};
    std::vector<Integer> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Integer> q(r.size() - db, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const Integer c = r[k + db];
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < db; ++j)
            mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), bc[j].get_mpz_t());
        r[k + db] = 0;
    }
    r.resize(db);
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly derivative(const IntPoly& f) {
    if (f.degree() <= 0) return {};
    std::vector<Integer> d;
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) d.push_back(f.coeffs()[i] * static_cast<unsigned long>(i));
    return IntPoly(std::move(d));
}

IntPoly power(const IntPoly& f, unsigned e) {
    IntPoly result = IntPoly::constant(1);
    IntPoly b = f;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

Integer resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const std::size_t m = static_cast<std::size_t>(a.degree());
    const std::size_t n = static_cast<std::size_t>(b.degree());
    const std::size_t size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<Integer>> mat(size, std::vector<Integer>(size, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) mat[r][r + j] = a.coeffs()[m - j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) mat[n + r][r + j] = b.coeffs()[n - j];

    // Bareiss fraction-free elimination.
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (mat[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < size && mat[swap][k] == 0) ++swap;
            if (swap == size) return 0;
            std::swap(mat[k], mat[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                Integer v = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
                mpz_divexact(mat[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            mat[i][k] = 0;
        }
        prev = mat[k][k];
    }
    return sign * mat[size - 1][size - 1];
}

Integer discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw Error("discriminant needs degree >= 1");
    const unsigned long n = static_cast<unsigned long>(f.degree());
    Integer res = resultant(f, derivative(f));
    Integer d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
    if ((n * (n - 1) / 2) % 2) d = -d;
    return d;
}

}  // namespace monogen
