#pragma once

#include <string>

#include "monogen/polygon.hpp"

namespace monogen::cli {

inline constexpr const char* kEmptyPolygonMessage = "no negative-slope sides";

// Plot with axis ticks and side labels S1, S2, ...; at most 100 columns.
std::string render_ascii(const polygon::PrincipalPolygon& poly, const std::string& title);

// Standalone SVG 1.1 document.
std::string render_svg(const polygon::PrincipalPolygon& poly, const std::string& title);

}  // namespace monogen::cli
