#pragma once
// Dense integer polynomials with arbitrary-precision coefficients.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monogen/arith.hpp"
#include "monogen/fppoly.hpp"

namespace monogen {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, std::size_t k);
    static IntPoly x() { return monomial(1, 1); }
    // x^n - m
    static IntPoly binomial(std::size_t n, const Integer& m);
    // Coefficients of an F_p polynomial lifted into [0, p).
    static IntPoly lift(const fp::FpPoly& f);
    // Plain ASCII grammar: terms `c x^k`, `c*x^k`, `c x`, `c`, joined by + or -.
    static IntPoly parse(std::string_view text);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Integer& coeff(std::size_t i) const;
    const Integer& leading() const { return coeff(c_.size() - 1); }
    const std::vector<Integer>& coeffs() const { return c_; }

    Integer eval(const Integer& v) const;
    fp::FpPoly reduce(fp::Residue p) const;
    // min over nonzero coefficients of nu_p; throws on the zero polynomial.
    unsigned valuation(const Integer& p) const;
    // Divides every coefficient by d; throws unless all divisions are exact.
    IntPoly exact_div(const Integer& d) const;
    std::string to_string() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Integer& c, const IntPoly& a);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();

    std::vector<Integer> c_;
};

// Euclidean division by a monic divisor; exact over Z.
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& b);
IntPoly derivative(const IntPoly& f);
IntPoly power(const IntPoly& f, unsigned e);
// Determinant of the Sylvester matrix, by fraction-free elimination.
Integer resultant(const IntPoly& a, const IntPoly& b);
// (-1)^(n(n-1)/2) * res(f, f') / lc(f)
Integer discriminant(const IntPoly& f);

}  // namespace monogen
