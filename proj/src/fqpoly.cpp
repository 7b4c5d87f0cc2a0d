#include "monogen/fqpoly.hpp"

#include <algorithm>
#include <sstream>

#include "monogen/detail/factorization.hpp"
#include "monogen/error.hpp"

namespace monogen::fq {

FiniteField::FiniteField(FpPoly modulus) : modulus_(std::move(modulus)) {
    if (!modulus_.is_monic()) throw Error("field modulus must be monic");
    if (!fp::is_irreducible(modulus_)) throw Error("field modulus must be irreducible");
    mpz_ui_pow_ui(order_.get_mpz_t(), modulus_.modulus(), degree());
}

FieldPtr make_field(FpPoly modulus) { return std::make_shared<const FiniteField>(std::move(modulus)); }

FqElement::FqElement(FieldPtr field, FpPoly rep) : field_(std::move(field)), rep_(std::move(rep)) {
    rep_ = field_->reduce(rep_);
}

FqElement operator+(const FqElement& a, const FqElement& b) { return {a.field_, a.rep_ + b.rep_}; }
FqElement operator-(const FqElement& a, const FqElement& b) { return {a.field_, a.rep_ - b.rep_}; }
FqElement operator*(const FqElement& a, const FqElement& b) {
    return {a.field_, a.field_->mul(a.rep_, b.rep_)};
}
FqElement FqElement::inverse() const { return {field_, field_->inv(rep_)}; }

FqPoly::FqPoly(FieldPtr field) : field_(std::move(field)) {}

FqPoly::FqPoly(FieldPtr field, std::vector<FpPoly> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto& c : c_) c = field_->reduce(c);
    trim();
}

FqPoly::FqPoly(FieldPtr field, const std::vector<FqElement>& coeffs) : field_(std::move(field)) {
    for (const auto& c : coeffs) c_.push_back(field_->reduce(c.rep()));
    trim();
}

void FqPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FqElement FqPoly::coeff(std::size_t i) const {
    if (i < c_.size()) return {field_, c_[i]};
    return {field_, FpPoly(field_->characteristic())};
}

std::string FqPoly::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const auto& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        bool unit = c.is_one();
        if (!unit || i == 0) {
            if (c.degree() > 0) os << "(" << c.to_string('t') << ")";
            else os << c.to_string('t');
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    std::vector<FpPoly> out(std::max(a.c_.size(), b.c_.size()), FpPoly(a.field_->characteristic()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return FqPoly(a.field_, std::move(out));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
    std::vector<FpPoly> out(std::max(a.c_.size(), b.c_.size()), FpPoly(a.field_->characteristic()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return FqPoly(a.field_, std::move(out));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return FqPoly(a.field_);
    // Multiply as bivariate polynomials, reduce coefficients once at the end.
    std::vector<FpPoly> out(a.c_.size() + b.c_.size() - 1, FpPoly(a.field_->characteristic()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return FqPoly(a.field_, std::move(out));
}

FqPoly FqPoly::scaled(const FpPoly& c) const {
    std::vector<FpPoly> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(field_->mul(v, c));
    return FqPoly(field_, std::move(out));
}

std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    const auto& field = a.field();
    const Residue p = field->characteristic();
    if (a.degree() < b.degree()) return {FqPoly(field), a};
    std::vector<FpPoly> r = a.reps();
    const auto& bc = b.reps();
    const std::size_t db = bc.size() - 1;
    const FpPoly inv = field->inv(bc.back());
    std::vector<FpPoly> q(r.size() - db, FpPoly(p));
    for (std::size_t k = q.size(); k-- > 0;) {
        FpPoly c = field->mul(r[k + db], inv);
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] = field->reduce(r[k + j] - c * bc[j]);
        q[k] = std::move(c);
    }
    r.resize(db, FpPoly(p));
    return {FqPoly(field, std::move(q)), FqPoly(field, std::move(r))};
}

FqPoly monic(const FqPoly& f) {
    if (f.is_zero() || f.reps().back().is_one()) return f;
    return f.scaled(f.field()->inv(f.reps().back()));
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
    FqPoly x = a, y = b;
    while (!y.is_zero()) {
        FqPoly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

FqPoly derivative(const FqPoly& f) {
    const auto& field = f.field();
    const Residue p = field->characteristic();
    if (f.degree() <= 0) return FqPoly(field);
    std::vector<FpPoly> d;
    for (std::size_t i = 1; i < f.reps().size(); ++i) {
        FpPoly c = f.reps()[i];
        c *= static_cast<Residue>(i % p);
        d.push_back(std::move(c));
    }
    return FqPoly(field, std::move(d));
}

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m) { return divrem(a * b, m).second; }

FqPoly powmod(const FqPoly& base, const Integer& e, const FqPoly& m) {
    if (e < 0) throw Error("negative exponent");
    FqPoly result = divrem(one_like(m), m).second;
    FqPoly b = divrem(base, m).second;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
    }
    return result;
}

FqPoly pth_root(const FqPoly& f) {
    // c^(1/p) = c^(q/p) in F_q.
    const auto& field = f.field();
    const Residue p = field->characteristic();
    const Integer root_exp = field->order() / p;
    std::vector<FpPoly> out;
    for (std::size_t i = 0; i < f.reps().size(); i += p) out.push_back(field->pow(f.reps()[i], root_exp));
    return FqPoly(field, std::move(out));
}

FqPoly random_poly_like(const FqPoly& f, long degree_bound, std::mt19937_64& rng) {
    const auto& field = f.field();
    std::vector<FpPoly> out;
    for (long i = 0; i < degree_bound; ++i)
        out.push_back(fp::random_poly_like(field->modulus(), field->degree(), rng));
    return FqPoly(field, std::move(out));
}

FqPoly one_like(const FqPoly& f) {
    return FqPoly(f.field(), std::vector<FpPoly>{FpPoly::constant(f.field()->characteristic(), 1)});
}

FqPoly x_like(const FqPoly& f) {
    const Residue p = f.field()->characteristic();
    return FqPoly(f.field(), std::vector<FpPoly>{FpPoly(p), FpPoly::constant(p, 1)});
}

bool canonical_less(const FqPoly& a, const FqPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.reps().size(); i-- > 0;) {
        const auto& x = a.reps()[i];
        const auto& y = b.reps()[i];
        if (fp::canonical_less(x, y)) return true;
        if (fp::canonical_less(y, x)) return false;
    }
    return false;
}

std::vector<FqFactor> factor(const FqPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error("cannot factor the zero polynomial");
    std::vector<FqFactor> out;
    for (auto& pp : detail::factor_monic(monic(f), seed)) out.push_back({std::move(pp.poly), pp.multiplicity});
    return out;
}

bool is_separable(const FqPoly& f) {
    if (f.is_zero()) throw Error("separability of the zero polynomial");
    return gcd(f, derivative(f)).degree() == 0;
}

bool is_irreducible(const FqPoly& f) { return detail::irreducible(f); }

}  // namespace monogen::fq
