#pragma once

#include <array>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "crosscycle/crossing.hpp"
#include "crosscycle/families.hpp"

namespace crosscycle {

// Sigma^+ is the closed first quadrant; Sigma^- is its closed complement.
// The switching set is the union of the two closed positive half-axes.
enum class Region { SigmaPlus, SigmaMinus };

enum class Orientation { Forward, Backward };

enum class TerminalAxis { PositiveX, PositiveY, None };

struct ArcResult {
    std::array<double, 2> start{};
    std::array<double, 2> end{};
    std::vector<std::array<double, 2>> polyline;
    // Largest |H(p) - H(start)| / (1 + |H(start)|) over the polyline.
    double h_drift = 0;
    // Largest penetration depth into the forbidden region over the polyline.
    double region_violation = 0;
    TerminalAxis terminal_axis = TerminalAxis::None;
};

// Integrates the field from a point of the switching set until the orbit
// crosses a positive half-axis again. Crossings of the negative half-axes
// are interior to Sigma^- and pass through. Backward orientation integrates
// the reversed field. length_budget 0 derives the arc-length cap from the
// start point.
ArcResult integrate_to_axis(const std::pair<BiPoly, BiPoly>& field, const BiPoly& H,
                            std::array<double, 2> start, Region region, Orientation orientation,
                            double tol, double length_budget = 0);

inline constexpr double kClosureThreshold = 1e-5;
inline constexpr double kPenetrationTol = 1e-7;

struct CycleVerification {
    CrossingSolution solution;
    ArcResult saddle_arc;
    ArcResult center_arc;
    // Worst endpoint mismatch against the partner crossing point, relative
    // to the cycle diameter.
    double closure_residual = std::numeric_limits<double>::infinity();
    bool verified = false;
    std::string diagnostic;
};

// Certifies an algebraic crossing solution geometrically: the saddle arc must
// run from (x,0) to (0,y) through Sigma^+ and the center arc back through
// Sigma^-. Orientations are chosen from the transversal field components,
// with the reverse tried when the first choice fails.
CycleVerification verify_cycle(const PiecewiseSystem& sys, const CrossingSolution& sol, double tol);

// Closed curve through both arcs; the first point is repeated at the end.
// Throws std::invalid_argument for an unverified cycle.
std::vector<std::array<double, 2>> emit_polyline(const CycleVerification& v);

}  // namespace crosscycle
