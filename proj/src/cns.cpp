#include "monogen/cns.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "monogen/error.hpp"
#include "monogen/purefield.hpp"

namespace monogen::cns {
namespace {

constexpr std::uint64_t kMaxBoxSize = 50'000'000;
constexpr std::uint64_t kEnumerationBudget = 1u << 17;

bool is_zero(const Element& z) {
    return std::all_of(z.begin(), z.end(), [](const Integer& c) { return c == 0; });
}

Integer choose_digit(const CnsBasis& basis, const Integer& z0) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), z0.get_mpz_t(), basis.b.get_mpz_t());
    if (basis.mode == DigitMode::Signed && 2 * r > basis.b) r -= basis.b;
    return r;
}

// theta * z in Z[theta]
void multiply_by_theta(const IntPoly& G, Element& z) {
    const std::size_t n = z.size();
    Integer top = z[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) z[i] = z[i - 1];
    z[0] = 0;
    if (top != 0)
        for (std::size_t i = 0; i < n; ++i) mpz_submul(z[i].get_mpz_t(), top.get_mpz_t(), G.coeff(i).get_mpz_t());
}

std::string digits_key(const std::vector<Integer>& digits) {
    std::string key;
    for (const auto& d : digits) {
        key += d.get_str();
        key += ',';
    }
    return key;
}

bool certify_irreducible(const IntPoly& G) {
    const Integer& c0 = G.coeff(0);
    for (const auto& q : arith::factorize(c0).primes()) {
        bool eisenstein = c0 % (q * q) != 0;
        for (long i = 1; eisenstein && i < G.degree(); ++i)
            if (G.coeff(static_cast<std::size_t>(i)) % q != 0) eisenstein = false;
        if (eisenstein) return true;
    }
    for (fp::Residue p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
        auto g = G.reduce(p);
        if (g.degree() == G.degree() && fp::is_irreducible(g)) return true;
    }
    return false;
}

struct CellResult {
    DigitExpansion expansion;
    bool roundtrip_ok = true;
};

}  // namespace

std::string digit_mode_name(DigitMode mode) { return mode == DigitMode::Standard ? "standard" : "signed"; }

DigitMode parse_digit_mode(const std::string& text) {
    if (text == "standard") return DigitMode::Standard;
    if (text == "signed") return DigitMode::Signed;
    throw Error("unknown digit mode '" + text + "' (expected standard or signed)");
}

CnsBasis CnsBasis::make(const IntPoly& G, DigitMode mode) {
    if (G.degree() < 1 || !G.is_monic()) throw Error("CNS polynomial must be monic of degree >= 1");
    CnsBasis basis{G, abs(G.coeff(0)), mode, false};
    if (basis.b < 2) throw Error("|c_0| >= 2 required for a digit set");
    basis.irreducibility_certified = certify_irreducible(G);
    return basis;
}

bool kovacs_hypothesis(const IntPoly& G) {
    if (!G.is_monic() || G.degree() < 3) return false;
    const auto n = static_cast<std::size_t>(G.degree());
    if (G.coeff(n - 1) < 1) return false;
    for (std::size_t i = n - 1; i > 0; --i)
        if (G.coeff(i) > G.coeff(i - 1)) return false;
    return G.coeff(0) >= 2 && abs(G.coeff(0)) > 2;
}

std::uint64_t default_step_cap(const CnsBasis& basis, std::uint64_t radius) {
    const double log2b = static_cast<double>(mpz_sizeinbase(basis.b.get_mpz_t(), 2));
    const double cap = 10.0 * static_cast<double>(radius + 1) * static_cast<double>(basis.degree()) * log2b + 64.0;
    return static_cast<std::uint64_t>(std::ceil(cap));
}

DigitExpansion encode(const CnsBasis& basis, const Element& z, std::uint64_t step_cap) {
    if (step_cap == 0) throw Error("step_cap must be positive");
    const std::size_t n = basis.degree();
    if (z.size() != n) throw Error("element needs exactly " + std::to_string(n) + " coordinates");
    DigitExpansion out;
    if (is_zero(z)) {
        out.digits.push_back(0);
        out.terminated = true;
        return out;
    }
    const Integer& c0 = basis.G.coeff(0);
    Element state = z;
    std::set<Element> visited;
    for (std::uint64_t step = 0;; ++step) {
        if (is_zero(state)) {
            out.terminated = true;
            return out;
        }
        if (!visited.insert(state).second) {
            out.cycle_witness = state;
            return out;
        }
        if (step == step_cap) {
            out.cap_exhausted = true;
            return out;
        }
        Integer d = choose_digit(basis, state[0]);
        Integer q;
        Integer diff = state[0] - d;
        mpz_divexact(q.get_mpz_t(), diff.get_mpz_t(), c0.get_mpz_t());
        Element next(n);
        next[n - 1] = -q;
        for (std::size_t i = 1; i < n; ++i) next[i - 1] = state[i] - basis.G.coeff(i) * q;
        out.digits.push_back(std::move(d));
        state = std::move(next);
    }
}

DigitExpansion encode(const CnsBasis& basis, const Element& z) {
    Integer radius = 0;
    for (const auto& c : z) radius = std::max<Integer>(radius, abs(c));
    const std::uint64_t r = radius.fits_ulong_p() ? radius.get_ui() : ~std::uint64_t(0) / 1024;
    return encode(basis, z, default_step_cap(basis, std::min<std::uint64_t>(r, 1u << 20)));
}

Element decode(const CnsBasis& basis, const std::vector<Integer>& digits) {
    const auto lo = basis.digit_min();
    const auto hi = basis.digit_max();
    Element acc(basis.degree(), 0);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it < lo || *it > hi)
            throw Error("digit " + it->get_str() + " outside [" + lo.get_str() + ", " + hi.get_str() + "]");
        multiply_by_theta(basis.G, acc);
        acc[0] += *it;
    }
    return acc;
}

Element parse_element(const std::string& text, std::size_t n) {
    Element out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        Integer v;
        if (item.empty() || v.set_str(item, 10) != 0) throw Error("bad element coordinate '" + item + "'");
        out.push_back(v);
    }
    if (out.size() > n) throw Error("element has more than " + std::to_string(n) + " coordinates");
    out.resize(n, 0);
    return out;
}

BoxReport verify_box(const CnsBasis& basis, std::uint64_t radius, std::uint64_t step_cap, unsigned jobs) {
    const std::size_t n = basis.degree();
    BoxReport rep;
    rep.radius = radius;
    rep.step_cap = step_cap ? step_cap : default_step_cap(basis, radius);

    const std::uint64_t side = 2 * radius + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > kMaxBoxSize / side) throw Error("box has more than 50000000 elements");
        total *= side;
    }
    rep.total = total;

    auto element_at = [&](std::uint64_t index) {
        Element z(n);
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = static_cast<long>(index % side) - static_cast<long>(radius);
            index /= side;
        }
        return z;
    };

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));
    std::vector<CellResult> cells(total);
    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            Element z = element_at(i);
            CellResult cell{encode(basis, z, rep.step_cap), true};
            if (cell.expansion.terminated) cell.roundtrip_ok = decode(basis, cell.expansion.digits) == z;
            cells[i] = std::move(cell);
        }
    };
    if (jobs <= 1) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            const std::uint64_t begin = j * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    std::unordered_map<std::string, std::uint64_t> seen;
    bool first_digit = true;
    for (std::uint64_t i = 0; i < total; ++i) {
        const auto& cell = cells[i];
        const auto& ex = cell.expansion;
        if (!ex.terminated) {
            ++rep.non_terminated;
            if (ex.cycle_witness) ++rep.cycles;
            if (rep.witnesses.size() < kMaxWitnesses) rep.witnesses.push_back(element_at(i));
            continue;
        }
        ++rep.terminated;
        if (!cell.roundtrip_ok) ++rep.roundtrip_failures;
        rep.max_digits = std::max<std::uint64_t>(rep.max_digits, ex.digits.size());
        for (const auto& d : ex.digits) {
            if (first_digit || d < rep.min_digit_used) rep.min_digit_used = d;
            if (first_digit || d > rep.max_digit_used) rep.max_digit_used = d;
            first_digit = false;
        }
        if (seen[digits_key(ex.digits)]++ > 0) ++rep.collisions;
    }

    if (basis.mode == DigitMode::Signed && basis.b.fits_ulong_p() && basis.b < (1 << 16)) {
        const std::uint64_t symbols = 2 * basis.b.get_ui() - 1;
        std::uint64_t budget = 0, layer = 1, length = 0;
        while (layer <= kEnumerationBudget / symbols && budget + layer * symbols <= kEnumerationBudget) {
            layer *= symbols;
            budget += layer;
            ++length;
        }
        rep.enumeration_length = length;
        const auto in_box = [&](const Element& z) {
            for (const auto& c : z)
                if (abs(c) > radius) return false;
            return true;
        };
        std::map<Element, std::uint64_t> hits;
        hits[Element(n, 0)] = 1;  // [0]
        const Integer lo = basis.digit_min();
        std::vector<Integer> digits;
        for (std::uint64_t len = 1; len <= length; ++len) {
            digits.assign(len, lo);
            for (;;) {
                if (digits.back() != 0) {
                    Element z = decode(basis, digits);
                    if (in_box(z)) ++hits[z];
                }
                std::size_t k = 0;
                while (k < len && digits[k] == basis.digit_max()) digits[k++] = lo;
                if (k == len) break;
                ++digits[k];
            }
        }
        std::uint64_t multiple = 0;
        for (const auto& [z, count] : hits)
            if (count >= 2) ++multiple;
        rep.multiple_expansions = multiple;
    }
    return rep;
}

MonogenicCns cns_from_monogenic(std::uint64_t n, const Integer& a, std::uint64_t u, std::uint64_t radius,
                                unsigned jobs) {
    auto verdict = purefield::construct_generator(n, a, u);
    const auto& mono = std::get<purefield::Monogenic>(verdict.status);
    MonogenicCns out{CnsBasis::make(mono.G, DigitMode::Standard), false, {}, {}, {}};
    out.kovacs = kovacs_hypothesis(mono.G);
    out.standard = verify_box(out.basis, radius, 0, jobs);
    out.signed_digits = verify_box(CnsBasis::make(mono.G, DigitMode::Signed), radius, 0, jobs);
    const std::string top = out.basis.digit_max().get_str();
    if (!out.kovacs)
        out.notes.push_back("x^n - a has zero or negative lower coefficients; the Kovacs chain condition fails");
    out.notes.push_back("standard digits {0,...," + top + "}: " +
                        std::to_string(out.standard.terminated) + "/" + std::to_string(out.standard.total) +
                        " box elements terminate");
    out.notes.push_back("signed digits {-" + top + ",...," + top +
                        "}: " + std::to_string(out.signed_digits.terminated) + "/" +
                        std::to_string(out.signed_digits.total) +
                        " box elements terminate; uniqueness checked only by bounded enumeration");
    out.notes.push_back("digit set {1,...,|a|} without 0 is recorded but not implemented: it cannot encode 0");
    return out;
}

}  // namespace monogen::cns
