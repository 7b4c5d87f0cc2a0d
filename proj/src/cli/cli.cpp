#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "monogen/error.hpp"
#include "monogen/serialize.hpp"
#include "monogen/simd/kernels.hpp"
#include "render.hpp"

namespace monogen::cli {
namespace {

using io::Json;

struct Options {
    std::uint64_t seed = 0;
    unsigned nu_cap = 64;
    std::string format = "json";
    unsigned jobs = 1;
    std::string out;
    std::uint64_t d_bound = 0;
    std::uint64_t expand_limit = 64;
    std::uint64_t step_cap = 0;

    std::string n, m, a, u, p;
    std::string poly, phi;
    std::string render = "ascii";
    std::string n_range, m_range, a_range, u_range;
    std::string family = "criterion";
    std::string mode = "full";
    std::string element, digits;
    std::string digit_mode = "standard";
    std::uint64_t radius = 1;
    unsigned r = 0, s = 0;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Outcome {
    Json config;
    Json result;
    std::string text;
    std::optional<Table> csv;
    std::uint64_t failures = 0;
};

// Integer expressions: sums and differences of products of powers,
// e.g. 7^8-1 or 5*7^7.
class ExprParser {
public:
    explicit ExprParser(std::string text) : s_(std::move(text)) {
        s_.erase(std::remove_if(s_.begin(), s_.end(), [](unsigned char c) { return std::isspace(c); }), s_.end());
    }

    Integer parse() {
        if (s_.empty()) fail("empty");
        Integer v = sum();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error("cannot parse integer '" + s_ + "': " + why);
    }

    Integer sum() {
        Integer v = product();
        while (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
            const char op = s_[i_++];
            Integer w = product();
            v = op == '+' ? Integer(v + w) : Integer(v - w);
        }
        return v;
    }

    Integer product() {
        Integer v = power();
        while (i_ < s_.size() && s_[i_] == '*') {
            ++i_;
            v *= power();
        }
        return v;
    }

    Integer power() {
        Integer base = atom();
        if (i_ < s_.size() && s_[i_] == '^') {
            ++i_;
            Integer e = atom();
            if (e < 0 || !e.fits_ulong_p() || e > 100000) fail("exponent out of range");
            Integer out;
            mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e.get_ui());
            return out;
        }
        return base;
    }

    Integer atom() {
        if (i_ < s_.size() && s_[i_] == '-') {
            ++i_;
            return -atom();
        }
        if (i_ < s_.size() && s_[i_] == '(') {
            ++i_;
            Integer v = sum();
            if (i_ >= s_.size() || s_[i_] != ')') fail("missing ')'");
            ++i_;
            return v;
        }
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a number");
        return Integer(s_.substr(start, i_ - start));
    }

    std::string s_;
    std::size_t i_ = 0;
};

Integer parse_integer(const std::string& text) { return ExprParser(text).parse(); }

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    const Integer v = parse_integer(text);
    if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) throw Error(what + " must fit in an unsigned 64-bit word");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

// Comma-separated items, each `a:b` (inclusive) or a single value.
std::vector<Integer> parse_range(const std::string& text, const std::string& what) {
    constexpr std::uint64_t kMaxItems = 10'000'000;
    std::vector<Integer> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            out.push_back(parse_integer(item));
        } else {
            const Integer lo = parse_integer(item.substr(0, colon));
            const Integer hi = parse_integer(item.substr(colon + 1));
            if (hi >= lo && hi - lo >= kMaxItems) throw Error(what + " range too large");
            for (Integer v = lo; v <= hi; ++v) out.push_back(v);
        }
        if (out.size() > kMaxItems) throw Error(what + " range too large");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string join(const std::vector<Integer>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
    return out;
}

Json global_config(const Options& o) {
    return {{"seed", o.seed}, {"nu_cap", o.nu_cap}, {"format", o.format}, {"jobs", o.jobs}};
}

purefield::AnalysisConfig analysis_config(const Options& o) {
    return {o.nu_cap, o.d_bound, o.expand_limit, o.seed};
}

IntPoly input_poly(const Options& o) {
    if (!o.poly.empty()) {
        if (!o.n.empty() || !o.m.empty()) throw Error("give either --poly or --n/--m, not both");
        return IntPoly::parse(o.poly);
    }
    if (o.n.empty() || o.m.empty()) throw Error("a polynomial is required: --poly or --n with --m");
    return IntPoly::binomial(parse_u64(o.n, "n"), parse_integer(o.m));
}

std::string status_of(const purefield::MonogenityVerdict& v) {
    if (v.not_monogenic()) return "NotMonogenic";
    if (v.monogenic()) return "Monogenic";
    return "Inconclusive";
}

std::string verdict_text(const purefield::MonogenityVerdict& v) {
    std::ostringstream os;
    os << status_of(v) << "\n  provenance: " << v.provenance << "\n";
    if (const auto* nm = std::get_if<purefield::NotMonogenic>(&v.status)) {
        os << "  p = " << nm->p << ", d = " << nm->witness_d << ", L = " << nm->L << ", N = " << nm->N << "\n";
        if (nm->theorem)
            os << "  r = " << nm->theorem->r << ", u = " << nm->theorem->u << ", nu = " << nm->theorem->nu
               << (nm->theorem->nu_capped ? " (capped)" : "") << ", N_p(d,u,m) = " << nm->theorem->factor_count
               << "\n";
    } else if (const auto* mg = std::get_if<purefield::Monogenic>(&v.status)) {
        os << "  generator alpha^" << mg->t << " / " << mg->a << "^" << mg->s << " with minimal polynomial "
           << mg->G.to_string() << "\n";
        for (const auto& c : mg->generator_checks)
            os << "  nu_" << c.q << "(index of G) = " << c.index_valuation << "\n";
        os << "  nu_" << mg->alpha_index.q << "(index of alpha) = " << mg->alpha_index.index_valuation
           << " >= " << mg->alpha_index_bound << "\n";
    } else {
        for (const auto& note : std::get<purefield::Inconclusive>(v.status).notes) os << "  " << note << "\n";
    }
    return os.str();
}

// Large discriminants are printed as sign * n^n * |m|^(n-1).
io::Json discriminant_json(std::uint64_t n, const Integer& m) {
    if (n <= 512) return io::integer_json(purefield::binomial_discriminant(n, m));
    const bool odd_pairs = (n / 2) % 2 == 1;  // n(n-1)/2 odd
    const bool negative = odd_pairs != (m > 0 && (n - 1) % 2 == 1);
    return std::string(negative ? "-" : "") + std::to_string(n) + "^" + std::to_string(n) + "*" +
           Integer(abs(m)).get_str() + "^" + std::to_string(n - 1);
}

Outcome cmd_analyze(const Options& o) {
    Outcome res;
    const std::uint64_t n = parse_u64(o.n, "n");
    const Integer m = parse_integer(o.m);
    res.config = global_config(o);
    res.config["n"] = n;
    res.config["m"] = io::integer_json(m);
    res.config["d_bound"] = o.d_bound;
    res.config["expand_limit"] = o.expand_limit;

    if (!purefield::binomial_irreducible(n, m)) throw Error("x^" + std::to_string(n) + " - " + m.get_str() + " is reducible over Q");
    const auto verdict = purefield::analyze(n, m, analysis_config(o));
    const IntPoly f = IntPoly::binomial(n, m);
    res.result = {{"polynomial", f.to_string()},
                  {"discriminant", discriminant_json(n, m)},
                  {"verdict", io::verdict_json(verdict)}};
    res.text = f.to_string() + ": " + verdict_text(verdict);
    Table t{{"n", "m", "status", "p", "d", "provenance"}, {}};
    std::string p, d;
    if (const auto* nm = std::get_if<purefield::NotMonogenic>(&verdict.status)) {
        p = nm->p.get_str();
        d = std::to_string(nm->witness_d);
    }
    t.rows.push_back({std::to_string(n), m.get_str(), status_of(verdict), p, d, verdict.provenance});
    res.csv = std::move(t);
    return res;
}

Outcome cmd_polygon(const Options& o) {
    Outcome res;
    const IntPoly f = input_poly(o);
    const Integer p = parse_integer(o.p);
    if (p < 2 || p >= Integer(static_cast<unsigned long>(fp::kMaxModulus)) || !arith::is_prime(p))
        throw Error("p must be a prime below 2^31");
    if (o.render != "ascii" && o.render != "svg") throw Error("--render must be ascii or svg");
    res.config = global_config(o);
    res.config["polynomial"] = f.to_string();
    res.config["p"] = io::integer_json(p);
    res.config["phi"] = o.phi;
    res.config["render"] = o.render;

    const auto pw = static_cast<fp::Residue>(p.get_ui());
    const fp::FpPoly fbar = f.reduce(pw);
    if (fbar.is_zero()) throw Error("F vanishes modulo p");
    std::vector<IntPoly> phis;
    if (!o.phi.empty()) {
        IntPoly phi = IntPoly::parse(o.phi);
        if (phi.degree() < 1 || !phi.is_monic()) throw Error("phi must be monic of degree >= 1");
        if (!fp::rem(fbar, phi.reduce(pw)).is_zero()) throw Error("phi mod p is not a factor of F mod p");
        phis.push_back(std::move(phi));
    } else {
        for (const auto& fac : fp::factor(fbar, o.seed).factors) phis.push_back(IntPoly::lift(fac.factor));
    }
    if (o.format == "text" && o.render == "svg" && phis.size() != 1)
        throw Error("F mod p has several irreducible factors; choose one with --phi for SVG output");

    Json polys = Json::array();
    for (const auto& phi : phis) {
        const auto exp = polygon::phi_expand(f, phi);
        const auto poly = polygon::principal_polygon(exp, p);
        const std::string title = f.to_string() + ", p = " + p.get_str() + ", phi = " + phi.to_string();
        const std::string drawing = o.render == "svg" ? render_svg(poly, title) : render_ascii(poly, title);
        Json parts = Json::array();
        for (const auto& part : exp.parts) parts.push_back(part.to_string());
        Json entry = {{"phi", phi.to_string()},
                      {"parts", parts},
                      {"polygon", io::polygon_json(poly)},
                      {"index", polygon::polygon_index(poly, static_cast<unsigned>(phi.degree()))}};
        if (poly.empty()) entry["message"] = kEmptyPolygonMessage;
        entry["rendering"] = drawing;
        polys.push_back(std::move(entry));

        if (o.render == "svg" && o.format == "text") {
            res.text += drawing;
            continue;
        }
        std::ostringstream os;
        os << "phi = " << phi.to_string() << "\n";
        if (poly.empty()) {
            os << "  " << kEmptyPolygonMessage << "\n";
        } else {
            os << "  vertices:";
            for (const auto& v : poly.vertices) os << " (" << v.x << "," << v.y << ")";
            os << "\n";
            for (std::size_t i = 0; i < poly.sides.size(); ++i) {
                const auto& s = poly.sides[i];
                auto [num, den] = s.slope();
                os << "  S" << i + 1 << ": slope " << num << "/" << den << ", length " << s.length() << ", height "
                   << s.height() << ", degree " << s.degree() << "\n";
            }
            os << "  ind = " << polygon::polygon_index(poly, static_cast<unsigned>(phi.degree())) << "\n";
        }
        os << drawing;
        res.text += os.str();
    }
    res.result = {{"polynomial", f.to_string()}, {"p", io::integer_json(p)}, {"polygons", polys}};
    return res;
}

Outcome cmd_factor(const Options& o) {
    Outcome res;
    const IntPoly f = input_poly(o);
    const Integer p = parse_integer(o.p);
    if (p < 2 || p >= Integer(static_cast<unsigned long>(fp::kMaxModulus)) || !arith::is_prime(p))
        throw Error("p must be a prime below 2^31");
    if (!f.is_monic()) throw Error("F must be monic");
    res.config = global_config(o);
    res.config["polynomial"] = f.to_string();
    res.config["p"] = io::integer_json(p);

    const auto split = ore::ore_split(f, p, o.seed);
    Json result = {{"polynomial", f.to_string()}, {"split", io::split_json(split)}};
    if (split.exact) result["common_index_divisor"] = io::common_index_json(ore::common_index_divisor(split));
    res.result = std::move(result);

    std::ostringstream os;
    os << f.to_string() << " at p = " << p << ": " << (split.exact ? "p-regular" : "not p-regular (lower bound)")
       << ", nu_p(index) " << (split.exact ? "= " : ">= ") << split.index_valuation << "\n";
    Table t{{"phi", "side", "residual_factor", "e", "f", "multiplicity", "certain"}, {}};
    for (const auto& s : split.slots) {
        os << "  phi = " << s.phi.to_string() << ", S" << s.side_index + 1 << ", residual "
           << s.residual_factor.to_string('y') << ": e = " << s.e << ", f = " << s.f
           << (s.certain ? "" : " (uncertain)") << "\n";
        t.rows.push_back({s.phi.to_string(), "S" + std::to_string(s.side_index + 1), s.residual_factor.to_string('y'),
                          std::to_string(s.e), std::to_string(s.f), std::to_string(s.multiplicity),
                          s.certain ? "true" : "false"});
    }
    if (split.exact) {
        const auto cid = ore::common_index_divisor(split);
        if (cid.found)
            os << "  common index divisor: d = " << cid.witness_d << ", L = " << cid.primes
               << " > N = " << cid.irreducibles << "\n";
    }
    res.text = os.str();
    res.csv = std::move(t);
    return res;
}

template <class Task, class Fn>
void run_parallel(std::vector<Task>& tasks, unsigned jobs, Fn fn) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, tasks.size())));
    if (jobs <= 1) {
        for (auto& t : tasks) fn(t);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back([&, j] {
            for (std::size_t i = j; i < tasks.size(); i += jobs) fn(tasks[i]);
        });
    for (auto& t : pool) t.join();
}

struct SearchTask {
    std::uint64_t n = 0;
    Integer m;
    Integer a;
    std::uint64_t u = 0;
    std::string status;
    std::string error;
    std::optional<purefield::MonogenityVerdict> verdict;
};

std::string generator_skip_reason(std::uint64_t n, const Integer& a, std::uint64_t u) {
    if (u < 2) return "u >= 2 required";
    if (std::gcd(u, n) != 1) return "gcd(u, n) != 1";
    if (abs(a) < 2 || !arith::is_squarefree(a)) return "a not squarefree";
    for (const auto& q : arith::factorize(Integer(static_cast<unsigned long>(n))).primes())
        if (a % q != 0) return "prime " + q.get_str() + " of n does not divide a";
    return {};
}

Outcome cmd_search(const Options& o) {
    Outcome res;
    const bool generator = o.family == "generator";
    if (!generator && o.family != "criterion") throw Error("--family must be criterion or generator");
    if (o.mode != "full" && o.mode != "criterion") throw Error("--mode must be full or criterion");
    const auto ns = parse_range(o.n_range, "n");
    res.config = global_config(o);
    res.config["family"] = o.family;
    res.config["n_range"] = o.n_range;
    res.config["mode"] = o.mode;
    res.config["d_bound"] = o.d_bound;
    res.config["expand_limit"] = o.expand_limit;

    std::vector<SearchTask> tasks;
    for (const auto& nv : ns) {
        if (nv < 1 || !nv.fits_ulong_p()) throw Error("n values must be positive 64-bit integers");
        if (generator) {
            for (const auto& a : parse_range(o.a_range, "a"))
                for (const auto& uv : parse_range(o.u_range, "u")) {
                    if (uv < 1 || !uv.fits_ulong_p()) throw Error("u values must be positive");
                    SearchTask t;
                    t.n = nv.get_ui();
                    t.a = a;
                    t.u = uv.get_ui();
                    mpz_pow_ui(t.m.get_mpz_t(), a.get_mpz_t(), t.u);
                    tasks.push_back(std::move(t));
                }
        } else {
            for (const auto& m : parse_range(o.m_range, "m")) {
                SearchTask t;
                t.n = nv.get_ui();
                t.m = m;
                tasks.push_back(std::move(t));
            }
        }
    }
    if (generator) {
        res.config["a_range"] = o.a_range;
        res.config["u_range"] = o.u_range;
    } else {
        res.config["m_range"] = o.m_range;
    }

    const auto cfg = analysis_config(o);
    run_parallel(tasks, o.jobs, [&](SearchTask& t) {
        try {
            if (generator) {
                if (auto why = generator_skip_reason(t.n, t.a, t.u); !why.empty()) {
                    t.status = "skipped";
                    t.error = why;
                    return;
                }
            }
            if (t.n < 3 || abs(t.m) < 2 || !purefield::binomial_irreducible(t.n, t.m)) {
                t.status = "skipped";
                t.error = t.n < 3 ? "n < 3" : abs(t.m) < 2 ? "|m| < 2" : "reducible";
                return;
            }
            if (o.mode == "criterion") {
                t.verdict = purefield::theorem_general_test(t.n, t.m, cfg);
                if (!t.verdict) t.verdict = purefield::MonogenityVerdict{purefield::Inconclusive{{"criterion does not fire"}}, purefield::kProvenanceNone};
            } else {
                t.verdict = purefield::analyze(t.n, t.m, cfg);
            }
            t.status = status_of(*t.verdict);
        } catch (const std::exception& e) {
            t.status = "error";
            t.error = e.what();
        }
    });

    Json rows = Json::array();
    Table table;
    table.header = generator ? std::vector<std::string>{"n", "a", "u", "m", "status", "t", "s", "alpha_index",
                                                        "alpha_index_bound", "error"}
                             : std::vector<std::string>{"n", "m", "status", "p", "d", "L", "N", "provenance", "error"};
    std::map<std::string, std::uint64_t> tally;
    std::ostringstream os;
    for (const auto& t : tasks) {
        ++tally[t.status];
        if (t.status == "error") ++res.failures;
        Json row = {{"n", t.n}};
        if (generator) {
            row["a"] = io::integer_json(t.a);
            row["u"] = t.u;
        }
        row["m"] = io::integer_json(t.m);
        row["status"] = t.status;
        if (t.verdict) row["verdict"] = io::verdict_json(*t.verdict);
        if (!t.error.empty()) row[t.status == "skipped" ? "reason" : "error"] = t.error;
        rows.push_back(std::move(row));

        std::vector<std::string> cells;
        if (generator) {
            std::string ts, ss, ai, ab;
            if (t.verdict) {
                if (const auto* mg = std::get_if<purefield::Monogenic>(&t.verdict->status)) {
                    ts = mg->t.get_str();
                    ss = mg->s.get_str();
                    ai = std::to_string(mg->alpha_index.index_valuation);
                    ab = std::to_string(mg->alpha_index_bound);
                }
            }
            cells = {std::to_string(t.n), t.a.get_str(), std::to_string(t.u), t.m.get_str(), t.status, ts, ss, ai, ab,
                     t.error};
        } else {
            std::string p, d, L, N, prov;
            if (t.verdict) {
                prov = t.verdict->provenance;
                if (const auto* nm = std::get_if<purefield::NotMonogenic>(&t.verdict->status)) {
                    p = nm->p.get_str();
                    d = std::to_string(nm->witness_d);
                    L = nm->L.get_str();
                    N = nm->N.get_str();
                }
            }
            cells = {std::to_string(t.n), t.m.get_str(), t.status, p, d, L, N, prov, t.error};
        }
        os << "n = " << t.n << ", m = " << t.m << ": " << t.status;
        if (!t.error.empty()) os << " (" << t.error << ")";
        if (!cells.empty() && !generator && !cells[3].empty()) os << " [p = " << cells[3] << ", d = " << cells[4] << "]";
        os << "\n";
        table.rows.push_back(std::move(cells));
    }
    Json summary = Json::object();
    for (const auto& [k, v] : tally) summary[k] = v;
    res.result = {{"columns", table.header}, {"instances", tasks.size()}, {"summary", summary}, {"rows", rows}};
    res.text = os.str();
    res.csv = std::move(table);
    return res;
}

Outcome cmd_corollary(const Options& o) {
    Outcome res;
    const auto family = purefield::parse_family(o.family);
    const Integer m = parse_integer(o.m);
    res.config = global_config(o);
    res.config["family"] = o.family;
    res.config["r"] = o.r;
    res.config["s"] = o.s;
    res.config["m"] = io::integer_json(m);
    const auto rep = purefield::corollary_checks(family, o.r, o.s, m, analysis_config(o));
    res.result = io::corollary_json(rep);
    std::ostringstream os;
    os << "family " << purefield::family_name(rep.family) << ", n = " << rep.n << ", m = " << rep.m
       << ": hypothesis " << (rep.hypothesis ? "holds (clause " + std::to_string(rep.clause) + ")" : "fails")
       << ", criterion " << (rep.theorem_fires ? "fires" : "silent") << (rep.agrees ? "" : ", DISAGREES") << "\n";
    if (!rep.note.empty()) os << "  " << rep.note << "\n";
    res.text = os.str();
    return res;
}

cns::CnsBasis cns_basis(const Options& o) {
    if (o.poly.empty()) throw Error("--poly is required");
    return cns::CnsBasis::make(IntPoly::parse(o.poly), cns::parse_digit_mode(o.digit_mode));
}

Json cns_config(const Options& o) {
    Json c = global_config(o);
    c["poly"] = o.poly;
    c["digit_mode"] = o.digit_mode;
    return c;
}

std::string list(const std::vector<Integer>& v) { return "[" + join(v) + "]"; }

Outcome cmd_cns_encode(const Options& o) {
    Outcome res;
    const auto basis = cns_basis(o);
    const auto z = cns::parse_element(o.element, basis.degree());
    res.config = cns_config(o);
    res.config["element"] = io::integers_json(z);
    res.config["step_cap"] = o.step_cap;
    const auto ex = o.step_cap ? cns::encode(basis, z, o.step_cap) : cns::encode(basis, z);
    res.result = io::expansion_json(ex);
    if (ex.terminated) res.result["roundtrip"] = cns::decode(basis, ex.digits) == z;
    std::ostringstream os;
    os << list(z) << " -> ";
    if (ex.terminated) os << "digits " << list(ex.digits) << "\n";
    else if (ex.cycle_witness) os << "non-terminating, cycle through " << list(*ex.cycle_witness) << "\n";
    else os << "non-terminating within " << ex.digits.size() << " steps\n";
    res.text = os.str();
    return res;
}

Outcome cmd_cns_decode(const Options& o) {
    Outcome res;
    const auto basis = cns_basis(o);
    std::vector<Integer> digits;
    std::stringstream ss(o.digits);
    std::string item;
    while (std::getline(ss, item, ',')) digits.push_back(parse_integer(item));
    if (digits.empty()) throw Error("--digits is empty");
    res.config = cns_config(o);
    res.config["digits"] = io::integers_json(digits);
    const auto z = cns::decode(basis, digits);
    res.result = {{"element", io::integers_json(z)}};
    res.text = list(digits) + " -> " + list(z) + "\n";
    return res;
}

std::string box_text(const cns::BoxReport& rep) {
    std::ostringstream os;
    os << rep.terminated << "/" << rep.total << " terminated, " << rep.non_terminated << " non-terminating ("
       << rep.cycles << " cycles), max digits " << rep.max_digits << ", collisions " << rep.collisions << "\n";
    for (const auto& w : rep.witnesses) os << "  witness " << list(w) << "\n";
    if (rep.multiple_expansions)
        os << "  elements with several expansions of length <= " << rep.enumeration_length << ": "
           << *rep.multiple_expansions << "\n";
    return os.str();
}

Outcome cmd_cns_verify(const Options& o) {
    Outcome res;
    const auto basis = cns_basis(o);
    res.config = cns_config(o);
    res.config["radius"] = o.radius;
    res.config["step_cap"] = o.step_cap;
    const auto rep = cns::verify_box(basis, o.radius, o.step_cap, o.jobs);
    res.result = {{"basis", basis.G.to_string()},
                  {"irreducibility_certified", basis.irreducibility_certified},
                  {"kovacs", cns::kovacs_hypothesis(basis.G)},
                  {"report", io::box_json(rep)}};
    res.text = basis.G.to_string() + ", radius " + std::to_string(o.radius) + ": " + box_text(rep);
    res.csv = Table{{"basis", "digit_mode", "radius", "total", "terminated", "non_terminated", "max_digits", "collisions"},
                    {{basis.G.to_string(), o.digit_mode, std::to_string(o.radius), std::to_string(rep.total),
                      std::to_string(rep.terminated), std::to_string(rep.non_terminated),
                      std::to_string(rep.max_digits), std::to_string(rep.collisions)}}};
    return res;
}

Outcome cmd_cns_generator(const Options& o) {
    Outcome res;
    const std::uint64_t n = parse_u64(o.n, "n");
    const Integer a = parse_integer(o.a);
    const std::uint64_t u = parse_u64(o.u, "u");
    res.config = global_config(o);
    res.config["n"] = n;
    res.config["a"] = io::integer_json(a);
    res.config["u"] = u;
    res.config["radius"] = o.radius;
    const auto m = cns::cns_from_monogenic(n, a, u, o.radius, o.jobs);
    res.result = io::monogenic_cns_json(m);
    std::ostringstream os;
    os << "basis " << m.basis.G.to_string() << ", b = " << m.basis.b << ", kovacs " << (m.kovacs ? "true" : "false")
       << "\n  standard: " << box_text(m.standard) << "  signed: " << box_text(m.signed_digits);
    for (const auto& note : m.notes) os << "  " << note << "\n";
    res.text = os.str();
    return res;
}

std::string csv_escape(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string format_outcome(const std::string& command, const Outcome& res, const std::string& format, double ms) {
    if (format == "json") {
        Json doc = {{"schema_version", io::kSchemaVersion},
                    {"tool", "monogen"},
                    {"version", kToolVersion},
                    {"command", command},
                    {"config", res.config},
                    {"result", res.result},
                    {"timing_ms", ms}};
        return doc.dump(2) + "\n";
    }
    if (format == "csv") {
        if (!res.csv) throw Error("csv output is not available for '" + command + "'");
        std::string out;
        for (const auto* row : {&res.csv->header}) {
            for (std::size_t i = 0; i < row->size(); ++i) out += (i ? "," : "") + csv_escape((*row)[i]);
            out += "\n";
        }
        for (const auto& row : res.csv->rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_escape(row[i]);
            out += "\n";
        }
        return out;
    }
    return res.text;
}

std::filesystem::path resolve_out(const std::string& out) {
    std::filesystem::path path(out);
    if (path.is_relative()) {
        if (const char* dir = std::getenv(kOutDirVariable); dir && *dir) path = std::filesystem::path(dir) / path;
    }
    return path;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Monogenity certificates for pure number fields", "monogen"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "seed for randomized factorization")->capture_default_str();
    app.add_option("--nu-cap", o.nu_cap, "cap on the stable valuation nu")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
    app.add_option("--jobs", o.jobs, "worker threads (0: all hardware threads)")->capture_default_str();
    app.add_option("--out", o.out, std::string("write the report to this file (relative paths resolve against $") +
                                       kOutDirVariable + ")");

    auto* analyze = app.add_subcommand("analyze", "decide monogenity of Q(m^(1/n)) where a criterion applies");
    analyze->add_option("--n", o.n, "degree")->required();
    analyze->add_option("--m", o.m, "radicand")->required();
    analyze->add_option("--d-bound", o.d_bound, "largest residue degree scanned (0: all)");
    analyze->add_option("--expand-limit", o.expand_limit, "largest n for direct splitting")->capture_default_str();

    auto* poly_cmd = app.add_subcommand("polygon", "principal phi-Newton polygon");
    poly_cmd->add_option("--poly", o.poly, "monic integer polynomial, e.g. 'x^4 - 17'");
    poly_cmd->add_option("--n", o.n, "binomial degree");
    poly_cmd->add_option("--m", o.m, "binomial radicand");
    poly_cmd->add_option("--p", o.p, "prime")->required();
    poly_cmd->add_option("--phi", o.phi, "monic lift of an irreducible factor of F mod p");
    poly_cmd->add_option("--render", o.render, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));

    auto* factor = app.add_subcommand("factor", "Ore splitting of p in Z_K");
    factor->add_option("--poly", o.poly, "monic integer polynomial");
    factor->add_option("--n", o.n, "binomial degree");
    factor->add_option("--m", o.m, "binomial radicand");
    factor->add_option("--p", o.p, "prime")->required();

    auto* search = app.add_subcommand("search", "batch analysis over parameter ranges");
    search->add_option("--n-range", o.n_range, "n values: a:b or comma list")->required();
    search->add_option("--m-range", o.m_range, "m values (criterion family)");
    search->add_option("--a-range", o.a_range, "a values (generator family)");
    search->add_option("--u-range,--u", o.u_range, "u values (generator family)");
    search->add_option("--family", o.family, "criterion or generator")->capture_default_str();
    search->add_option("--mode", o.mode, "full or criterion")->capture_default_str();
    search->add_option("--d-bound", o.d_bound, "largest residue degree scanned (0: all)");
    search->add_option("--expand-limit", o.expand_limit, "largest n for direct splitting")->capture_default_str();

    auto* corollary = app.add_subcommand("corollary", "check a family's congruence hypotheses against the criterion");
    corollary->add_option("--family", o.family, "5-7, 3-11 or 5-11")->required();
    corollary->add_option("--r", o.r, "exponent of the first prime")->required();
    corollary->add_option("--s", o.s, "exponent of the second prime")->required();
    corollary->add_option("--m", o.m, "radicand")->required();

    auto* cns_cmd = app.add_subcommand("cns", "canonical number system tools");
    cns_cmd->require_subcommand(1);
    auto* enc = cns_cmd->add_subcommand("encode", "digit expansion of an element");
    auto* dec = cns_cmd->add_subcommand("decode", "element from a digit string");
    auto* ver = cns_cmd->add_subcommand("verify", "encode every element of a coordinate box");
    for (auto* sub : {enc, dec, ver}) {
        sub->add_option("--poly", o.poly, "monic integer polynomial")->required();
        sub->add_option("--digit-mode", o.digit_mode, "standard or signed")
            ->check(CLI::IsMember({"standard", "signed"}));
    }
    for (auto* sub : {enc, ver}) sub->add_option("--step-cap", o.step_cap, "iteration cap (0: default)");
    enc->add_option("--element", o.element, "coordinates a_0,...,a_(n-1)")->required();
    dec->add_option("--digits", o.digits, "digits a_0,...,a_l")->required();
    ver->add_option("--radius", o.radius, "box radius")->capture_default_str();
    auto* gen = cns_cmd->add_subcommand("generator", "CNS data for the generator basis x^n - a");
    gen->add_option("--n", o.n)->required();
    gen->add_option("--a", o.a)->required();
    gen->add_option("--u", o.u)->required();
    gen->add_option("--radius", o.radius, "box radius")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    std::string command;
    try {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome res;
        if (*analyze) {
            command = "analyze";
            res = cmd_analyze(o);
        } else if (*poly_cmd) {
            command = "polygon";
            res = cmd_polygon(o);
        } else if (*factor) {
            command = "factor";
            res = cmd_factor(o);
        } else if (*search) {
            command = "search";
            res = cmd_search(o);
        } else if (*corollary) {
            command = "corollary";
            res = cmd_corollary(o);
        } else if (*enc) {
            command = "cns encode";
            res = cmd_cns_encode(o);
        } else if (*dec) {
            command = "cns decode";
            res = cmd_cns_decode(o);
        } else if (*ver) {
            command = "cns verify";
            res = cmd_cns_verify(o);
        } else if (*gen) {
            command = "cns generator";
            res = cmd_cns_generator(o);
        }
        res.config["simd"] = simd::backend_name(simd::active_backend());
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        const std::string text = format_outcome(command, res, o.format, ms);
        if (o.out.empty()) {
            out << text;
        } else {
            const auto path = resolve_out(o.out);
            if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
            std::ofstream file(path);
            if (!file) throw Error("cannot open " + path.string());
            file << text;
            err << "wrote " << path.string() << "\n";
        }
        return res.failures == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << (command.empty() ? "" : command + ": ") << e.what() << "\n";
        return 1;
    }
}

}  // namespace monogen::cli
