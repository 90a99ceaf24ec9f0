#pragma once

// Dense sign-change grid scan over a positive-quadrant window, used as an
// independent oracle for solve_crossing. Both crossing polynomials are
// separable, P(x,y) = P(x,0) + P(0,y) - P(0,0), so each is scanned from two
// precomputed axis slices instead of a full bivariate grid.

#include <cmath>
#include <utility>
#include <vector>

#include "crosscycle/crossing.hpp"

namespace crosscycle::testing {

struct ScanOptions {
    double window = 50.0;
    double step = 1e-2;
    double dedupe = 1e-6;
};

namespace detail {

struct AxisSlices {
    std::vector<double> fx, gy;

    AxisSlices(const BiPoly& p, const std::vector<double>& xs, const std::vector<double>& ys) {
        DenseBi<double> d = to_dense<double>(p);
        double origin = d.eval(0.0, 0.0);
        fx.reserve(xs.size());
        gy.reserve(ys.size());
        for (double x : xs) fx.push_back(d.eval(x, 0.0));
        for (double y : ys) gy.push_back(d.eval(0.0, y) - origin);
    }

    double at(std::size_t i, std::size_t j) const { return fx[i] + gy[j]; }

    bool cell_changes_sign(std::size_t i, std::size_t j) const {
        double v00 = at(i, j), v10 = at(i + 1, j), v01 = at(i, j + 1), v11 = at(i + 1, j + 1);
        double lo = std::min(std::min(v00, v10), std::min(v01, v11));
        double hi = std::max(std::max(v00, v10), std::max(v01, v11));
        return lo <= 0 && hi >= 0;
    }
};

}  // namespace detail

// Candidate cells (all four corners not of one strict sign for both
// polynomials) are polished by bivariate Newton from the cell center.
inline std::vector<std::pair<double, double>> brute_force_scan(const CrossingPolys& cp,
                                                               const ScanOptions& opt = {}) {
    std::vector<double> grid;
    const auto n = static_cast<std::size_t>(std::lround(opt.window / opt.step));
    grid.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) grid.push_back(static_cast<double>(i) * opt.step);

    detail::AxisSlices pl(cp.PL, grid, grid);
    detail::AxisSlices pi(cp.Pi, grid, grid);

    DenseBi<double> dl = to_dense<double>(cp.PL), di = to_dense<double>(cp.Pi);
    DenseBi<double> dlx = to_dense<double>(partial(cp.PL, 0)), dly = to_dense<double>(partial(cp.PL, 1));
    DenseBi<double> dix = to_dense<double>(partial(cp.Pi, 0)), diy = to_dense<double>(partial(cp.Pi, 1));

    std::vector<std::pair<double, double>> found;
    for (std::size_t i = 0; i + 1 <= n; ++i) {
        for (std::size_t j = 0; j + 1 <= n; ++j) {
            if (!pl.cell_changes_sign(i, j) || !pi.cell_changes_sign(i, j)) continue;
            double x = grid[i] + opt.step / 2, y = grid[j] + opt.step / 2;
            bool converged = false;
            for (int it = 0; it < 40; ++it) {
                double r1 = dl.eval(x, y), r2 = di.eval(x, y);
                double a11 = dlx.eval(x, y), a12 = dly.eval(x, y);
                double a21 = dix.eval(x, y), a22 = diy.eval(x, y);
                double det = a11 * a22 - a12 * a21;
                if (std::abs(det) < 1e-300) break;
                double dx = (r1 * a22 - r2 * a12) / det;
                double dy = (a11 * r2 - a21 * r1) / det;
                x -= dx;
                y -= dy;
                if (std::hypot(dx, dy) <= 1e-13 * (1 + std::hypot(x, y))) {
                    converged = true;
                    break;
                }
            }
            if (!converged) continue;
            // Keep only roots that stay near their seed cell; a diverged
            // Newton run would otherwise duplicate a distant root.
            if (std::abs(x - (grid[i] + opt.step / 2)) > 2 * opt.step ||
                std::abs(y - (grid[j] + opt.step / 2)) > 2 * opt.step)
                continue;
            if (x <= opt.dedupe || y <= opt.dedupe) continue;
            bool dup = false;
            for (const auto& [px, py] : found)
                if (std::hypot(x - px, y - py) <= opt.dedupe) dup = true;
            if (!dup) found.emplace_back(x, y);
        }
    }
    return found;
}

}  // namespace crosscycle::testing
