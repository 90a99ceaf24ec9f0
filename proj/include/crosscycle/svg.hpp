#pragma once

#include <string>
#include <vector>

#include "crosscycle/orbits.hpp"

namespace crosscycle {

// Standalone SVG figure for a set of verified cycles. Each cycle is drawn
// as one closed polyline colored by its index from a fixed palette, over
// light coordinate axes with the switching set emphasized as the two
// positive half-axes. The view covers the outermost cycle with a 5% margin.
// With zoom a second panel is appended, cropped to the cycles clustered
// near the origin. Unverified entries are skipped.
std::string render_cycles_svg(const std::string& title,
                              const std::vector<CycleVerification>& cycles, bool zoom);

}  // namespace crosscycle
