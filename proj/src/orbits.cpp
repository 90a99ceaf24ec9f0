#include "crosscycle/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crosscycle {

namespace {

using Point = std::array<double, 2>;

double norm(const Point& p) { return std::hypot(p[0], p[1]); }

struct Field {
    DenseBi<double> f1, f2;
    double dir;

    Field(const std::pair<BiPoly, BiPoly>& f, Orientation o)
        : f1(to_dense<double>(f.first)),
          f2(to_dense<double>(f.second)),
          dir(o == Orientation::Forward ? 1.0 : -1.0) {}

    Point operator()(const Point& p) const {
        return {dir * f1.eval(p[0], p[1]), dir * f2.eval(p[0], p[1])};
    }
};

// Dormand-Prince 5(4) tableau.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB4[7] = {5179.0 / 57600,    0.0,          7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct StepResult {
    Point next;
    Point f_next;
    double err;
};

StepResult dopri_step(const Field& f, const Point& p, const Point& fp, double h, double tol) {
    Point k[7];
    k[0] = fp;
    for (int s = 1; s < 7; ++s) {
        Point q = p;
        for (int j = 0; j < s; ++j) {
            q[0] += h * kA[s][j] * k[j][0];
            q[1] += h * kA[s][j] * k[j][1];
        }
        k[s] = f(q);
    }
    Point next = p;
    for (int j = 0; j < 6; ++j) {
        next[0] += h * kA[6][j] * k[j][0];
        next[1] += h * kA[6][j] * k[j][1];
    }
    Point low = p;
    for (int j = 0; j < 7; ++j) {
        low[0] += h * kB4[j] * k[j][0];
        low[1] += h * kB4[j] * k[j][1];
    }
    double err = 0;
    for (int c = 0; c < 2; ++c) {
        double scale = tol + tol * std::max(std::abs(p[c]), std::abs(next[c]));
        err = std::max(err, std::abs(next[c] - low[c]) / scale);
    }
    return {next, k[6], err};
}

// One classical fixed step, used as dense output when localizing events.
Point rk4_step(const Field& f, const Point& p, double h) {
    Point k1 = f(p);
    Point k2 = f({p[0] + h / 2 * k1[0], p[1] + h / 2 * k1[1]});
    Point k3 = f({p[0] + h / 2 * k2[0], p[1] + h / 2 * k2[1]});
    Point k4 = f({p[0] + h * k3[0], p[1] + h * k3[1]});
    return {p[0] + h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
            p[1] + h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])};
}

double penetration(const Point& p, Region region) {
    if (region == Region::SigmaPlus) return std::max(0.0, std::max(-p[0], -p[1]));
    return std::max(0.0, std::min(p[0], p[1]));
}

bool on_switching_set(const Point& p) {
    return (std::abs(p[0]) <= 1e-9 && p[1] >= -1e-9) || (std::abs(p[1]) <= 1e-9 && p[0] >= -1e-9);
}

}  // namespace

ArcResult integrate_to_axis(const std::pair<BiPoly, BiPoly>& field, const BiPoly& H,
                            std::array<double, 2> start, Region region, Orientation orientation,
                            double tol, double length_budget) {
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    if (!on_switching_set(start)) throw std::invalid_argument("start not on the switching set");
    if (length_budget <= 0) length_budget = 1e4 * std::max(1.0, norm(start));

    Field f(field, orientation);
    DenseBi<double> dh = to_dense<double>(H);

    Point f0 = f(start);
    double fmag = norm(f0);
    if (fmag <= 1e-13 * (1 + norm(start))) throw std::runtime_error("equilibrium encountered");
    double normal = std::abs(start[0]) <= 1e-9 ? f0[0] : f0[1];
    if (std::abs(normal) <= 1e-9 * (1 + fmag)) throw std::runtime_error("non-transversal crossing");

    ArcResult arc;
    arc.start = start;
    arc.polyline.push_back(start);

    const double h_start = dh.eval(start[0], start[1]);
    const double h_scale = 1 + std::abs(h_start);

    // Local error is held two orders below the requested tolerance so that
    // accumulation over long arcs stays within the tol * 100 drift budget.
    const double tol_eff = std::max(tol * 1e-2, 1e-15);

    Point p = start, fp = f0;
    double h = 1e-6 * (1 + norm(p)) / (1 + fmag);
    double travelled = 0;
    for (long step = 0; step < 10000000; ++step) {
        if (norm(fp) <= 1e-13 * (1 + norm(p))) throw std::runtime_error("equilibrium encountered");

        StepResult r = dopri_step(f, p, fp, h, tol_eff);
        if (r.err > 1.0) {
            h *= std::max(0.2, 0.9 * std::pow(r.err, -0.2));
            if (h < 1e-15) throw std::runtime_error("no return to Σ");
            continue;
        }

        // Event scan on the step just taken: a coordinate leaving its sign
        // marks a candidate axis crossing. Only crossings of the positive
        // half-axes terminate the arc.
        double best_theta = 2.0;
        int best_coord = -1;
        Point best_point{};
        bool corner = false;
        for (int c = 0; c < 2; ++c) {
            if (p[c] == 0 || (p[c] < 0) == (r.next[c] < 0)) continue;
            double lo = 0, hi = 1;
            Point q = r.next;
            for (int it = 0; it < 60 && (hi - lo) * std::abs(h) > 1e-13; ++it) {
                double mid = (lo + hi) / 2;
                Point qm = rk4_step(f, p, mid * h);
                if ((qm[c] < 0) == (p[c] < 0))
                    lo = mid;
                else {
                    hi = mid;
                    q = qm;
                }
            }
            double other = q[1 - c];
            if (std::abs(other) <= 1e-9 && std::abs(q[c]) <= 1e-9) {
                corner = true;
                break;
            }
            if (other > 1e-9 && hi < best_theta) {
                best_theta = hi;
                best_coord = c;
                best_point = q;
            }
        }
        if (corner) throw std::runtime_error("degenerate corner arc");

        if (best_coord >= 0) {
            best_point[best_coord] = 0.0;
            arc.polyline.push_back(best_point);
            arc.end = best_point;
            arc.terminal_axis =
                best_coord == 0 ? TerminalAxis::PositiveY : TerminalAxis::PositiveX;
            arc.h_drift = std::max(
                arc.h_drift, std::abs(dh.eval(best_point[0], best_point[1]) - h_start) / h_scale);
            arc.region_violation = std::max(arc.region_violation, penetration(best_point, region));
            return arc;
        }

        travelled += std::hypot(r.next[0] - p[0], r.next[1] - p[1]);
        p = r.next;
        fp = r.f_next;
        arc.polyline.push_back(p);
        arc.h_drift = std::max(arc.h_drift, std::abs(dh.eval(p[0], p[1]) - h_start) / h_scale);
        arc.region_violation = std::max(arc.region_violation, penetration(p, region));
        if (travelled > length_budget) throw std::runtime_error("no return to Σ");

        h *= std::min(5.0, std::max(0.2, 0.9 * std::pow(std::max(r.err, 1e-10), -0.2)));
        h = std::min(h, 1.0);
    }
    throw std::runtime_error("no return to Σ");
}

namespace {

struct ArcAttempt {
    bool ok = false;
    ArcResult arc;
    std::string error;
};

ArcAttempt attempt_arc(const std::pair<BiPoly, BiPoly>& field, const BiPoly& H, const Point& start,
                       Region region, Orientation o, TerminalAxis want, double tol,
                       double budget) {
    ArcAttempt out;
    try {
        out.arc = integrate_to_axis(field, H, start, region, o, tol, budget);
    } catch (const std::runtime_error& e) {
        out.error = e.what();
        return out;
    }
    if (out.arc.terminal_axis != want) {
        out.error = "arc terminated on the wrong half-axis";
        return out;
    }
    out.ok = true;
    return out;
}

ArcAttempt arc_with_fallback(const std::pair<BiPoly, BiPoly>& field, const BiPoly& H,
                             const Point& start, Region region, Orientation first,
                             TerminalAxis want, double tol, double budget) {
    ArcAttempt a = attempt_arc(field, H, start, region, first, want, tol, budget);
    if (a.ok) return a;
    Orientation second =
        first == Orientation::Forward ? Orientation::Backward : Orientation::Forward;
    ArcAttempt b = attempt_arc(field, H, start, region, second, want, tol, budget);
    if (b.ok) return b;
    b.error = a.error + "; reversed: " + b.error;
    return b;
}

}  // namespace

CycleVerification verify_cycle(const PiecewiseSystem& sys, const CrossingSolution& sol,
                               double tol) {
    CycleVerification v;
    v.solution = sol;
    if (!sol.simple) {
        v.diagnostic = "non-transversal crossing";
        return v;
    }

    Point px{sol.x, 0.0}, qy{0.0, sol.y};
    double budget = 1e4 * std::max(1.0, std::hypot(sol.x, sol.y));

    // Into the first quadrant from (x,0) the saddle arc needs dy/dt > 0.
    double f2_at_px = to_dense<double>(sys.F_plus.second).eval(sol.x, 0.0);
    Orientation saddle_first = f2_at_px > 0 ? Orientation::Forward : Orientation::Backward;
    ArcAttempt sa = arc_with_fallback(sys.F_plus, sys.H_plus, px, Region::SigmaPlus, saddle_first,
                                      TerminalAxis::PositiveY, tol, budget);
    if (!sa.ok) {
        v.diagnostic = "saddle arc: " + sa.error;
        v.saddle_arc = sa.arc;
        return v;
    }
    v.saddle_arc = sa.arc;

    // Into Sigma^- from (0,y) the center arc needs dx/dt < 0.
    double f1_at_qy = to_dense<double>(sys.F_minus.first).eval(0.0, sol.y);
    Orientation center_first = f1_at_qy < 0 ? Orientation::Forward : Orientation::Backward;
    ArcAttempt ca = arc_with_fallback(sys.F_minus, sys.H_minus, qy, Region::SigmaMinus,
                                      center_first, TerminalAxis::PositiveX, tol, budget);
    if (!ca.ok) {
        v.diagnostic = "center arc: " + ca.error;
        v.center_arc = ca.arc;
        return v;
    }
    v.center_arc = ca.arc;

    double lo_x = sol.x, hi_x = sol.x, lo_y = 0, hi_y = 0;
    for (const auto& arc : {v.saddle_arc, v.center_arc})
        for (const Point& p : arc.polyline) {
            lo_x = std::min(lo_x, p[0]);
            hi_x = std::max(hi_x, p[0]);
            lo_y = std::min(lo_y, p[1]);
            hi_y = std::max(hi_y, p[1]);
        }
    double diameter = std::max(std::hypot(hi_x - lo_x, hi_y - lo_y), 1e-300);

    double gap = std::max(std::hypot(v.saddle_arc.end[0] - qy[0], v.saddle_arc.end[1] - qy[1]),
                          std::hypot(v.center_arc.end[0] - px[0], v.center_arc.end[1] - px[1]));
    v.closure_residual = gap / diameter;

    if (v.closure_residual > kClosureThreshold) {
        v.diagnostic = "closure residual above threshold";
        return v;
    }
    if (std::max(v.saddle_arc.region_violation, v.center_arc.region_violation) > kPenetrationTol) {
        v.diagnostic = "arc leaves its region";
        return v;
    }
    v.verified = true;
    return v;
}

std::vector<std::array<double, 2>> emit_polyline(const CycleVerification& v) {
    if (!v.verified) throw std::invalid_argument("cycle not verified");
    std::vector<Point> out = v.saddle_arc.polyline;
    out.insert(out.end(), v.center_arc.polyline.begin() + 1, v.center_arc.polyline.end());
    out.push_back(out.front());
    return out;
}

}  // namespace crosscycle
