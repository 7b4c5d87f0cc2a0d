#pragma once
// Digit expansions in base theta, theta a root of a monic G with nonzero
// constant term c_0. Elements of Z[theta] are coordinate vectors over
// 1, theta, ..., theta^(n-1).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monogen/intpoly.hpp"

namespace monogen::cns {

enum class DigitMode { Standard, Signed };

std::string digit_mode_name(DigitMode mode);
DigitMode parse_digit_mode(const std::string& text);

using Element = std::vector<Integer>;

struct CnsBasis {
    IntPoly G;
    Integer b;  // |c_0|
    DigitMode mode = DigitMode::Standard;
    // Eisenstein at some prime, or irreducible modulo a small prime.
    bool irreducibility_certified = false;

    // Throws unless G is monic of degree >= 1 with |c_0| >= 2.
    static CnsBasis make(const IntPoly& G, DigitMode mode = DigitMode::Standard);

    std::size_t degree() const { return static_cast<std::size_t>(G.degree()); }
    Integer digit_min() const { return mode == DigitMode::Standard ? Integer(0) : Integer(1 - b); }
    Integer digit_max() const { return b - 1; }
};

struct DigitExpansion {
    std::vector<Integer> digits;  // a_0 first
    bool terminated = false;
    std::optional<Element> cycle_witness;
    bool cap_exhausted = false;
};

// Degree >= 3, 1 <= a_{n-1} <= ... <= a_0, a_0 >= 2 and |N(theta)| = |a_0| > 2.
// Lower degrees return false.
bool kovacs_hypothesis(const IntPoly& G);

std::uint64_t default_step_cap(const CnsBasis& basis, std::uint64_t radius);

// Throws on step_cap = 0 or a coordinate vector of the wrong length.
DigitExpansion encode(const CnsBasis& basis, const Element& z, std::uint64_t step_cap);
DigitExpansion encode(const CnsBasis& basis, const Element& z);

// Throws on a digit outside the basis digit set.
Element decode(const CnsBasis& basis, const std::vector<Integer>& digits);

Element parse_element(const std::string& text, std::size_t n);

struct BoxReport {
    std::uint64_t radius = 0;
    std::uint64_t step_cap = 0;
    std::uint64_t total = 0;
    std::uint64_t terminated = 0;
    std::uint64_t non_terminated = 0;
    std::uint64_t cycles = 0;
    std::uint64_t max_digits = 0;
    std::uint64_t collisions = 0;
    std::uint64_t roundtrip_failures = 0;
    Integer min_digit_used = 0;
    Integer max_digit_used = 0;
    std::vector<Element> witnesses;  // first few non-terminating elements
    // Signed mode only: elements of the box reached by at least two digit
    // strings of length <= enumeration_length with a nonzero last digit.
    std::optional<std::uint64_t> multiple_expansions;
    std::uint64_t enumeration_length = 0;
};

inline constexpr std::size_t kMaxWitnesses = 16;

// step_cap = 0 selects default_step_cap; jobs = 0 uses every hardware thread.
BoxReport verify_box(const CnsBasis& basis, std::uint64_t radius, std::uint64_t step_cap = 0, unsigned jobs = 1);

struct MonogenicCns {
    CnsBasis basis;
    bool kovacs = false;
    BoxReport standard;
    BoxReport signed_digits;
    std::vector<std::string> notes;
};

// Validates the generator hypotheses through purefield::construct_generator.
MonogenicCns cns_from_monogenic(std::uint64_t n, const Integer& a, std::uint64_t u, std::uint64_t radius = 1,
                                unsigned jobs = 1);

}  // namespace monogen::cns
