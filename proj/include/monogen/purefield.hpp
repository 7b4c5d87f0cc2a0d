#pragma once
// Monogenity of pure fields Q(m^(1/n)): irreducibility of x^n - m, the
// closed-form phi-polygon at primes p | n, the non-monogenity criterion
// min{r+1, nu} * N_p(d, u, m) > N_p(d), the generator construction for
// x^n - a^u, and the analysis pipeline tying them together.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "monogen/ore.hpp"

namespace monogen::purefield {

// Capelli: x^n - m is irreducible over Q iff m is not a q-th power for any
// prime q | n and, when 4 | n, m != -4k^4.
bool binomial_irreducible(std::uint64_t n, const Integer& m);

struct PureFieldSpec {
    std::uint64_t n = 0;
    Integer m;
    arith::IntFactorization n_factors;
    arith::IntFactorization m_factors;

    // Throws unless n >= 3, |m| >= 2 and x^n - m is irreducible.
    static PureFieldSpec make(std::uint64_t n, const Integer& m);
};

struct ClosedFormData {
    Integer p;
    unsigned r = 0;
    std::uint64_t u = 0;  // n = u * p^r
    IntPoly phi;
    IntPoly U, T, H, V, R, A0;
    unsigned nu0 = 0;
    // phi mod p does not divide U*T mod p.
    bool coprime_condition = false;
    std::vector<polygon::LatticePoint> points;
    polygon::PrincipalPolygon hull;
};

// Throws when p is not an odd prime dividing n and coprime to m, or when
// phi mod p is not a monic irreducible factor of x^u - m mod p.
ClosedFormData closed_form_polygon(std::uint64_t n, const Integer& m, const Integer& p, const IntPoly& phi);

struct TheoremWitness {
    unsigned r = 0;
    std::uint64_t u = 0;
    unsigned nu = 0;
    bool nu_capped = false;
    unsigned multiplier = 0;              // min{r+1, nu}
    std::uint64_t factor_count = 0;       // N_p(d, u, m)
};

struct NotMonogenic {
    Integer p;
    std::uint64_t witness_d = 0;
    Integer L;  // prime ideals of residue degree d above p (or a lower bound)
    Integer N;  // N_p(d)
    std::optional<TheoremWitness> theorem;
};

struct IndexCheck {
    Integer q;
    std::uint64_t index_valuation = 0;
    bool exact = false;
};

struct Monogenic {
    Integer t;
    Integer s;
    Integer a;
    std::uint64_t u = 0;
    IntPoly G;  // x^n - a, minimal polynomial of the generator alpha^t / a^s
    std::vector<IndexCheck> generator_checks;
    IndexCheck alpha_index;                 // nu_p(ind alpha) at the smallest p | a
    std::uint64_t alpha_index_bound = 0;    // (n-1)(u-1)/2
};

struct Inconclusive {
    std::vector<std::string> notes;
};

struct MonogenityVerdict {
    std::variant<NotMonogenic, Monogenic, Inconclusive> status;
    std::string provenance;

    bool not_monogenic() const { return std::holds_alternative<NotMonogenic>(status); }
    bool monogenic() const { return std::holds_alternative<Monogenic>(status); }
    bool inconclusive() const { return std::holds_alternative<Inconclusive>(status); }
};

struct AnalysisConfig {
    unsigned nu_cap = 64;
    std::uint64_t d_bound = 0;        // 0: scan every useful d
    std::uint64_t expand_limit = 64;  // largest n for direct Ore splitting
    std::uint64_t seed = 0;
};

inline constexpr const char* kProvenanceTheorem = "pure-field criterion min{r+1,nu}*N_p(d,u,m) > N_p(d)";
inline constexpr const char* kProvenanceCommonIndex = "Ore splitting with L_p(d) > N_p(d)";
inline constexpr const char* kProvenanceGenerator = "generator alpha^t/a^s for x^n - a^u";
inline constexpr const char* kProvenanceNone = "no criterion applies";

// Non-monogenity test at every odd prime p | n with p not dividing m.
// Returns nullopt when no (p, d) fires; that is not a monogenity claim.
std::optional<MonogenityVerdict> theorem_general_test(std::uint64_t n, const Integer& m,
                                                      const AnalysisConfig& cfg = {});

enum class Family { F5_7, F3_11, F5_11 };

Family parse_family(const std::string& text);
std::string family_name(Family f);

struct CorollaryReport {
    Family family;
    unsigned r = 0;
    unsigned s = 0;
    Integer m;
    std::uint64_t n = 0;
    int clause = 0;            // 1 or 2 when the stated hypothesis holds, else 0
    bool hypothesis = false;
    bool irreducible = false;
    bool theorem_fires = false;
    std::optional<MonogenityVerdict> firing;
    bool agrees = true;        // hypothesis implies theorem firing
    std::string note;
};

// Evaluates the family's stated congruence hypotheses and runs the criterion
// on the same (n, m); disagreements are reported, never hidden.
CorollaryReport corollary_checks(Family family, unsigned r, unsigned s, const Integer& m,
                                 const AnalysisConfig& cfg = {});

// x^n - a^u with u >= 2, gcd(u, n) = 1, a squarefree and every prime of n
// dividing a. Throws naming the first failed hypothesis.
MonogenityVerdict construct_generator(std::uint64_t n, const Integer& a, std::uint64_t u, std::uint64_t seed = 0);

// Discriminant of x^n - a.
Integer binomial_discriminant(std::uint64_t n, const Integer& a);

// Throws when x^n - m is reducible. Claims monogenity only through
// construct_generator.
MonogenityVerdict analyze(std::uint64_t n, const Integer& m, const AnalysisConfig& cfg = {});

}  // namespace monogen::purefield
