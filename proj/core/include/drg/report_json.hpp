#pragma once

#include <string>

#include "drg/feasibility.hpp"

namespace drg {

/// Stable JSON shapes; exact values are rendered as strings. indent < 0
/// gives a single line.
std::string report_to_json(const FeasibilityReport& rep, int indent = -1);
std::string spectrum_to_json(const IntersectionArray& ia, const Spectrum& s, int indent = -1);

/// "{[15]^1, [5]^12, [-1]^15, [-3]^20}"
std::string format_spectrum(const Spectrum& s);

}  // namespace drg
