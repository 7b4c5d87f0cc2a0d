#pragma once
// JSON views of the certificates produced by the math modules. Integers
// that fit in 64 bits are JSON numbers; larger ones are decimal strings.

#include <json.hpp>

#include "monogen/cns.hpp"
#include "monogen/purefield.hpp"

namespace monogen::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json integer_json(const Integer& v);
Json integers_json(const std::vector<Integer>& v);

Json polygon_json(const polygon::PrincipalPolygon& poly);
Json split_json(const ore::PrimeSplit& split);
Json common_index_json(const ore::CommonIndexDivisor& cid);
Json verdict_json(const purefield::MonogenityVerdict& verdict);
Json corollary_json(const purefield::CorollaryReport& rep);
Json closed_form_json(const purefield::ClosedFormData& data);

Json expansion_json(const cns::DigitExpansion& ex);
Json box_json(const cns::BoxReport& rep);
Json monogenic_cns_json(const cns::MonogenicCns& m);

}  // namespace monogen::io
