#pragma once
// Finite fields F_q = F_p[t]/(phi) and dense polynomials over them. Residual
// polynomials live here: their coefficients are classes modulo (p, phi).

#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "monogen/fppoly.hpp"

namespace monogen::fq {

using fp::FpPoly;
using fp::Residue;

class FiniteField {
public:
    // Throws unless `modulus` is monic and irreducible over F_p.
    explicit FiniteField(FpPoly modulus);

    Residue characteristic() const { return modulus_.modulus(); }
    unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }
    const Integer& order() const { return order_; }
    const FpPoly& modulus() const { return modulus_; }

    FpPoly reduce(const FpPoly& a) const { return fp::rem(a, modulus_); }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const { return fp::mulmod(a, b, modulus_); }
    FpPoly inv(const FpPoly& a) const { return fp::invmod(a, modulus_); }
    FpPoly pow(const FpPoly& a, const Integer& e) const { return fp::powmod(a, e, modulus_); }

    friend bool operator==(const FiniteField& a, const FiniteField& b) {
        return a.modulus_ == b.modulus_;
    }

private:
    FpPoly modulus_;
    Integer order_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

FieldPtr make_field(FpPoly modulus);

class FqElement {
public:
    FqElement(FieldPtr field, FpPoly rep);

    const FieldPtr& field() const { return field_; }
    const FpPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    std::string to_string() const { return rep_.to_string('t'); }

    friend FqElement operator+(const FqElement& a, const FqElement& b);
    friend FqElement operator-(const FqElement& a, const FqElement& b);
    friend FqElement operator*(const FqElement& a, const FqElement& b);
    FqElement inverse() const;
    friend bool operator==(const FqElement& a, const FqElement& b) { return a.rep_ == b.rep_; }

private:
    FieldPtr field_;
    FpPoly rep_;
};

class FqPoly {
public:
    explicit FqPoly(FieldPtr field);
    FqPoly(FieldPtr field, std::vector<FpPoly> coeffs);
    FqPoly(FieldPtr field, const std::vector<FqElement>& coeffs);

    const FieldPtr& field() const { return field_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FqElement coeff(std::size_t i) const;
    FqElement leading() const { return coeff(c_.size() - 1); }
    const std::vector<FpPoly>& reps() const { return c_; }
    std::string to_string(char var = 'y') const;

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
    FqPoly scaled(const FpPoly& c) const;
    friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }

private:
    void trim();

    FieldPtr field_;
    std::vector<FpPoly> c_;
};

std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b);
FqPoly monic(const FqPoly& f);
FqPoly gcd(const FqPoly& a, const FqPoly& b);
FqPoly derivative(const FqPoly& f);
FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m);
FqPoly powmod(const FqPoly& base, const Integer& e, const FqPoly& m);
FqPoly pth_root(const FqPoly& f);
FqPoly random_poly_like(const FqPoly& f, long degree_bound, std::mt19937_64& rng);
FqPoly one_like(const FqPoly& f);
FqPoly x_like(const FqPoly& f);
inline Integer field_order(const FqPoly& f) { return f.field()->order(); }
inline Residue field_characteristic(const FqPoly& f) { return f.field()->characteristic(); }
inline unsigned field_degree(const FqPoly& f) { return f.field()->degree(); }
bool canonical_less(const FqPoly& a, const FqPoly& b);

struct FqFactor {
    FqPoly factor;
    unsigned multiplicity = 0;
};

// Monic irreducible factors over F_q with multiplicities, canonical order.
std::vector<FqFactor> factor(const FqPoly& f, std::uint64_t seed = 0);
bool is_separable(const FqPoly& f);
bool is_irreducible(const FqPoly& f);

}  // namespace monogen::fq
