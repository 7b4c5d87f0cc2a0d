#include "monogen/serialize.hpp"

namespace monogen::io {
namespace {

Json point_json(const polygon::LatticePoint& pt) { return Json::array({pt.x, pt.y}); }

Json status_name(const purefield::MonogenityVerdict& v) {
    if (v.not_monogenic()) return "NotMonogenic";
    if (v.monogenic()) return "Monogenic";
    return "Inconclusive";
}

Json index_check_json(const purefield::IndexCheck& c) {
    return {{"q", integer_json(c.q)}, {"index_valuation", c.index_valuation}, {"exact", c.exact}};
}

}  // namespace

Json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Json integers_json(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(integer_json(x));
    return out;
}

Json polygon_json(const polygon::PrincipalPolygon& poly) {
    Json vertices = Json::array();
    for (const auto& v : poly.vertices) vertices.push_back(point_json(v));
    Json sides = Json::array();
    for (std::size_t i = 0; i < poly.sides.size(); ++i) {
        const auto& s = poly.sides[i];
        auto [num, den] = s.slope();
        sides.push_back({{"label", "S" + std::to_string(i + 1)},
                         {"start", point_json(s.start)},
                         {"end", point_json(s.end)},
                         {"slope", std::to_string(num) + "/" + std::to_string(den)},
                         {"length", s.length()},
                         {"height", s.height()},
                         {"degree", s.degree()},
                         {"ramification", s.ramification()}});
    }
    return {{"vertices", vertices}, {"sides", sides}};
}

Json split_json(const ore::PrimeSplit& split) {
    Json branches = Json::array();
    for (const auto& b : split.branches) {
        Json parts = Json::array();
        for (const auto& part : b.expansion.parts) parts.push_back(part.to_string());
        Json residuals = Json::array();
        for (std::size_t i = 0; i < b.residuals.size(); ++i)
            residuals.push_back({{"side", "S" + std::to_string(i + 1)},
                                 {"polynomial", b.residuals[i].poly.to_string('y')},
                                 {"separable", static_cast<bool>(b.separable[i])}});
        branches.push_back({{"phi", b.phi.to_string()},
                            {"multiplicity", b.multiplicity},
                            {"parts", parts},
                            {"polygon", polygon_json(b.polygon)},
                            {"residuals", residuals},
                            {"index", b.index}});
    }
    Json slots = Json::array();
    for (const auto& s : split.slots)
        slots.push_back({{"phi", s.phi.to_string()},
                         {"side", s.side_index + 1},
                         {"residual_factor", s.residual_factor.to_string('y')},
                         {"e", s.e},
                         {"f", s.f},
                         {"multiplicity", s.multiplicity},
                         {"certain", s.certain}});
    return {{"p", integer_json(split.p)},
            {"exact", split.exact},
            {"index_valuation", split.index_valuation},
            {"index_valuation_kind", split.exact ? "exact" : "lower_bound"},
            {"branches", branches},
            {"slots", slots}};
}

Json common_index_json(const ore::CommonIndexDivisor& cid) {
    Json out = {{"found", cid.found}};
    if (cid.found) {
        out["witness_d"] = cid.witness_d;
        out["L"] = cid.primes;
        out["N"] = integer_json(cid.irreducibles);
    }
    return out;
}

Json verdict_json(const purefield::MonogenityVerdict& verdict) {
    Json out = {{"status", status_name(verdict)}, {"provenance", verdict.provenance}};
    if (const auto* nm = std::get_if<purefield::NotMonogenic>(&verdict.status)) {
        out["p"] = integer_json(nm->p);
        out["witness_d"] = nm->witness_d;
        out["L"] = integer_json(nm->L);
        out["N"] = integer_json(nm->N);
        if (nm->theorem) {
            const auto& t = *nm->theorem;
            out["criterion"] = {{"r", t.r},
                                {"u", t.u},
                                {"nu", t.nu},
                                {"nu_capped", t.nu_capped},
                                {"multiplier", t.multiplier},
                                {"factor_count", t.factor_count}};
        }
    } else if (const auto* mg = std::get_if<purefield::Monogenic>(&verdict.status)) {
        Json checks = Json::array();
        for (const auto& c : mg->generator_checks) checks.push_back(index_check_json(c));
        out["t"] = integer_json(mg->t);
        out["s"] = integer_json(mg->s);
        out["a"] = integer_json(mg->a);
        out["u"] = mg->u;
        out["G"] = mg->G.to_string();
        out["generator_checks"] = checks;
        out["alpha_index"] = index_check_json(mg->alpha_index);
        out["alpha_index_bound"] = mg->alpha_index_bound;
    } else {
        out["notes"] = std::get<purefield::Inconclusive>(verdict.status).notes;
    }
    return out;
}

Json corollary_json(const purefield::CorollaryReport& rep) {
    Json out = {{"family", purefield::family_name(rep.family)},
                {"r", rep.r},
                {"s", rep.s},
                {"m", integer_json(rep.m)},
                {"n", rep.n},
                {"clause", rep.clause},
                {"hypothesis", rep.hypothesis},
                {"irreducible", rep.irreducible},
                {"criterion_fires", rep.theorem_fires},
                {"agrees", rep.agrees}};
    if (rep.firing) out["firing"] = verdict_json(*rep.firing);
    if (!rep.note.empty()) out["note"] = rep.note;
    return out;
}

Json closed_form_json(const purefield::ClosedFormData& d) {
    Json points = Json::array();
    for (const auto& pt : d.points) points.push_back(point_json(pt));
    return {{"p", integer_json(d.p)},
            {"r", d.r},
            {"u", d.u},
            {"phi", d.phi.to_string()},
            {"U", d.U.to_string()},
            {"T", d.T.to_string()},
            {"R", d.R.to_string()},
            {"A0", d.A0.to_string()},
            {"nu0", d.nu0},
            {"coprime_condition", d.coprime_condition},
            {"points", points},
            {"polygon", polygon_json(d.hull)}};
}

Json expansion_json(const cns::DigitExpansion& ex) {
    Json out = {{"digits", integers_json(ex.digits)}, {"terminated", ex.terminated}};
    if (ex.cycle_witness) out["cycle_witness"] = integers_json(*ex.cycle_witness);
    if (ex.cap_exhausted) out["cap_exhausted"] = true;
    return out;
}

Json box_json(const cns::BoxReport& rep) {
    Json witnesses = Json::array();
    for (const auto& w : rep.witnesses) witnesses.push_back(integers_json(w));
    Json out = {{"radius", rep.radius},
                {"step_cap", rep.step_cap},
                {"total", rep.total},
                {"terminated", rep.terminated},
                {"non_terminated", rep.non_terminated},
                {"cycles", rep.cycles},
                {"max_digits", rep.max_digits},
                {"collisions", rep.collisions},
                {"roundtrip_failures", rep.roundtrip_failures},
                {"digit_range_used", rep.terminated ? Json::array({integer_json(rep.min_digit_used),
                                                                   integer_json(rep.max_digit_used)})
                                                    : Json::array()},
                {"non_terminating_witnesses", witnesses}};
    if (rep.multiple_expansions) {
        out["multiple_expansions"] = *rep.multiple_expansions;
        out["enumeration_length"] = rep.enumeration_length;
    }
    return out;
}

Json monogenic_cns_json(const cns::MonogenicCns& m) {
    return {{"basis", m.basis.G.to_string()},
            {"b", integer_json(m.basis.b)},
            {"irreducibility_certified", m.basis.irreducibility_certified},
            {"kovacs", m.kovacs},
            {"standard", box_json(m.standard)},
            {"signed", box_json(m.signed_digits)},
            {"notes", m.notes}};
}

}  // namespace monogen::io
