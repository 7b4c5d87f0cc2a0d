#include "monogen/ore.hpp"

#include <algorithm>

#include "monogen/error.hpp"

namespace monogen::ore {

PrimeSplit ore_split(const IntPoly& f, const Integer& p, std::uint64_t seed) {
    if (!f.is_monic() || f.degree() < 1) throw Error("F must be monic of degree >= 1");
    if (!arith::is_prime(p) || p >= Integer(static_cast<unsigned long>(fp::kMaxModulus)))
        throw Error("p must be a prime below 2^31");
    const auto pw = static_cast<fp::Residue>(p.get_ui());

    PrimeSplit split;
    split.p = p;
    const auto reduction = fp::factor(f.reduce(pw), seed);
    std::uint64_t residual_seed = seed;
    for (const auto& fac : reduction.factors) {
        PhiBranch branch{IntPoly::lift(fac.factor), fac.multiplicity, {}, {}, {}, {}, 0};
        branch.expansion = polygon::phi_expand(f, branch.phi);
        // A lift dividing F has a_0 = 0; F has finitely many monic factors,
        // so shifting the constant term by p terminates.
        while (branch.expansion.parts.front().is_zero()) {
            branch.phi = branch.phi + IntPoly::constant(p);
            branch.expansion = polygon::phi_expand(f, branch.phi);
        }
        branch.polygon = polygon::principal_polygon(branch.expansion, p);
        const auto deg_phi = static_cast<unsigned>(branch.phi.degree());
        branch.index = polygon::polygon_index(branch.polygon, deg_phi);
        split.index_valuation += branch.index;

        for (std::size_t s = 0; s < branch.polygon.sides.size(); ++s) {
            const auto& side = branch.polygon.sides[s];
            auto residual = polygon::residual_polynomial(branch.expansion, side, p);
            const bool separable = fq::is_separable(residual.poly);
            split.exact = split.exact && separable;
            for (auto& psi : fq::factor(residual.poly, ++residual_seed)) {
                const std::int64_t f_deg = static_cast<std::int64_t>(deg_phi) * psi.factor.degree();
                FactorSlot slot{branch.phi,         s,     std::move(psi.factor), psi.multiplicity,
                                side.ramification(), f_deg, separable};
                split.slots.push_back(std::move(slot));
            }
            branch.residuals.push_back(std::move(residual));
            branch.separable.push_back(separable);
        }
        split.branches.push_back(std::move(branch));
    }
    return split;
}

bool is_p_regular(const IntPoly& f, const Integer& p, std::uint64_t seed) {
    return ore_split(f, p, seed).exact;
}

std::uint64_t primes_of_degree(const PrimeSplit& split, std::uint64_t d) {
    if (!split.exact) throw Error("L_p(d) undefined without p-regularity");
    return static_cast<std::uint64_t>(std::count_if(split.slots.begin(), split.slots.end(), [d](const FactorSlot& s) {
        return static_cast<std::uint64_t>(s.f) == d;
    }));
}

CommonIndexDivisor common_index_divisor(const PrimeSplit& split) {
    if (!split.exact) throw Error("L_p(d) undefined without p-regularity");
    std::int64_t max_f = 0;
    for (const auto& s : split.slots) max_f = std::max(max_f, s.f);
    const std::uint64_t p = split.p.get_ui();
    for (std::uint64_t d = 1; d <= static_cast<std::uint64_t>(max_f); ++d) {
        std::uint64_t l = primes_of_degree(split, d);
        if (l == 0) continue;
        Integer n = arith::count_irreducibles(p, d);
        if (Integer(static_cast<unsigned long>(l)) > n) return {true, d, l, n};
    }
    return {};
}

CommonIndexDivisor common_index_divisor(const IntPoly& f, const Integer& p, std::uint64_t seed) {
    return common_index_divisor(ore_split(f, p, seed));
}

}  // namespace monogen::ore
