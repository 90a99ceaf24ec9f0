#include "crosscycle/crossing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "crosscycle/roots.hpp"

namespace crosscycle {

namespace {

BiPoly lift_x(const UniPoly& u) {
    BiPoly out;
    for (int i = 0; i <= u.degree(); ++i)
        if (u.coeff(i) != 0) out = out + BiPoly::monomial(i, 0, u.coeff(i));
    return out;
}

BiPoly lift_y(const UniPoly& u) {
    BiPoly out;
    for (int j = 0; j <= u.degree(); ++j)
        if (u.coeff(j) != 0) out = out + BiPoly::monomial(0, j, u.coeff(j));
    return out;
}

}  // namespace

BiPoly crossing_difference(const BiPoly& H) {
    return lift_x(H.restrict_y0()) - lift_y(H.restrict_x0());
}

CrossingPolys build_crossing_polys(const PiecewiseSystem& sys) {
    CrossingPolys cp;
    cp.PL = crossing_difference(sys.H_minus);
    cp.Pi = crossing_difference(sys.H_plus);
    cp.provenance = Provenance::Generated;
    if (cp.PL.is_zero() || cp.Pi.is_zero())
        throw std::runtime_error("degenerate crossing polynomial");
    return cp;
}

namespace {

// The closed forms below are term-for-term transcriptions; each family
// subcase pair shares every term except the pure quartic-chain signs,
// which enter through sgn (+1 for the first subcase form, -1 for the
// second). Term order follows the source listings.

class TermSum {
public:
    void add(int i, int j, const Rat& coeff) { s_ = s_ + BiPoly::monomial(i, j, coeff); }
    BiPoly scaled(const Rat& pre) const { return s_ * pre; }

private:
    BiPoly s_;
};

BiPoly appendix_p1(const SaddleParams& p) {
    // The x^2 coefficient is a^2, matching the integral this polynomial is
    // the axis difference of; the source listing drops the square.
    TermSum t;
    t.add(2, 0, 2 * p.a * p.a);
    t.add(4, 0, -p.b);
    t.add(0, 2, -2 * p.b * p.b);
    return t.scaled(Rat(1) / (4 * p.b));
}

BiPoly appendix_p2(const SaddleParams& p, const AffineMap& m) {
    const Rat &a = p.a, &b = p.b;
    const Rat &a1 = m.a1, &b1 = m.b1, &c1 = m.c1, &al = m.alpha1, &be = m.beta1, &ga = m.gamma1;
    TermSum t;
    t.add(1, 0, 2 * a * a * a1 * c1);
    t.add(2, 0, a * a * a1 * a1);
    t.add(0, 1, -2 * a * a * b1 * c1);
    t.add(0, 2, -(a * a * b1 * b1));
    t.add(1, 0, 2 * a * b * c1 * al);
    t.add(1, 0, -2 * b * c1 * c1 * c1 * al);
    t.add(2, 0, 2 * a * a1 * b * al);
    t.add(2, 0, -6 * a1 * b * c1 * c1 * al);
    t.add(3, 0, -6 * a1 * a1 * b * c1 * al);
    t.add(4, 0, -2 * a1 * a1 * a1 * b * al);
    t.add(2, 0, b * b * al * al);
    t.add(0, 1, -2 * a * b * c1 * be);
    t.add(0, 1, 2 * b * c1 * c1 * c1 * be);
    t.add(0, 2, -2 * a * b * b1 * be);
    t.add(0, 2, 6 * b * b1 * c1 * c1 * be);
    t.add(0, 3, 6 * b * b1 * b1 * c1 * be);
    t.add(0, 4, 2 * b * b1 * b1 * b1 * be);
    t.add(0, 2, -(b * b * be * be));
    t.add(1, 0, 2 * a * a1 * b * ga);
    t.add(1, 0, -6 * a1 * b * c1 * c1 * ga);
    t.add(2, 0, -6 * a1 * a1 * b * c1 * ga);
    t.add(3, 0, -2 * a1 * a1 * a1 * b * ga);
    t.add(0, 1, -2 * a * b * b1 * ga);
    t.add(0, 1, 6 * b * b1 * c1 * c1 * ga);
    t.add(0, 2, 6 * b * b1 * b1 * c1 * ga);
    t.add(0, 3, 2 * b * b1 * b1 * b1 * ga);
    t.add(1, 0, 2 * b * b * al * ga);
    t.add(0, 1, -2 * b * b * be * ga);
    return t.scaled(Rat(1) / (2 * b));
}

// Third and fourth family first-subcase forms (sgn +1 and -1).
BiPoly appendix_p35(const Rat& c, const AffineMap& m, int sgn) {
    const Rat &a1 = m.a1, &b1 = m.b1, &c1 = m.c1, &al = m.alpha1, &be = m.beta1, &ga = m.gamma1;
    TermSum t;
    t.add(1, 0, -4 * a1 * c * c1);
    t.add(2, 0, -2 * a1 * a1 * c);
    t.add(0, 1, 4 * b1 * c * c1);
    t.add(0, 2, 2 * b1 * b1 * c);
    t.add(2, 0, -6 * c1 * c1 * al * al);
    t.add(3, 0, -12 * a1 * c1 * al * al);
    t.add(4, 0, -6 * a1 * a1 * al * al);
    t.add(4, 0, sgn * al * al * al * al);
    t.add(0, 2, 6 * c1 * c1 * be * be);
    t.add(0, 3, 12 * b1 * c1 * be * be);
    t.add(0, 4, 6 * b1 * b1 * be * be);
    t.add(0, 4, -sgn * be * be * be * be);
    t.add(1, 0, -12 * c1 * c1 * al * ga);
    t.add(2, 0, -24 * a1 * c1 * al * ga);
    t.add(3, 0, -12 * a1 * a1 * al * ga);
    t.add(3, 0, sgn * 4 * al * al * al * ga);
    t.add(0, 1, 12 * c1 * c1 * be * ga);
    t.add(0, 2, 24 * b1 * c1 * be * ga);
    t.add(0, 3, 12 * b1 * b1 * be * ga);
    t.add(0, 3, -sgn * 4 * be * be * be * ga);
    t.add(1, 0, -12 * a1 * c1 * ga * ga);
    t.add(2, 0, -6 * a1 * a1 * ga * ga);
    t.add(0, 1, 12 * b1 * c1 * ga * ga);
    t.add(0, 2, 6 * b1 * b1 * ga * ga);
    t.add(2, 0, sgn * 6 * al * al * ga * ga);
    t.add(0, 2, -sgn * 6 * be * be * ga * ga);
    t.add(1, 0, sgn * 4 * al * ga * ga * ga);
    t.add(0, 1, -sgn * 4 * be * ga * ga * ga);
    return t.scaled(Rat(1, 4));
}

// Third and fourth family second-subcase forms.
BiPoly appendix_p46(const Rat& a, const Rat& b, const AffineMap& m, int sgn) {
    const Rat &a1 = m.a1, &b1 = m.b1, &c1 = m.c1, &al = m.alpha1, &be = m.beta1, &ga = m.gamma1;
    TermSum t;
    t.add(1, 0, 4 * a * a * a1 * c1);
    t.add(2, 0, 2 * a * a * a1 * a1);
    t.add(0, 1, -4 * a * a * b1 * c1);
    t.add(0, 2, -2 * a * a * b1 * b1);
    t.add(1, 0, 4 * a * b * c1 * al);
    t.add(2, 0, 4 * a * a1 * b * al);
    t.add(2, 0, 2 * b * b * al * al);
    t.add(2, 0, -6 * b * c1 * c1 * al * al);
    t.add(3, 0, -12 * a1 * b * c1 * al * al);
    t.add(4, 0, -6 * a1 * a1 * b * al * al);
    t.add(4, 0, sgn * b * al * al * al * al);
    t.add(0, 1, -4 * a * b * c1 * be);
    t.add(0, 2, -4 * a * b * b1 * be);
    t.add(0, 2, -2 * b * b * be * be);
    t.add(0, 2, 6 * b * c1 * c1 * be * be);
    t.add(0, 3, 12 * b * b1 * c1 * be * be);
    t.add(0, 4, 6 * b * b1 * b1 * be * be);
    t.add(0, 4, -sgn * b * be * be * be * be);
    t.add(1, 0, 4 * a * a1 * b * ga);
    t.add(0, 1, -4 * a * b * b1 * ga);
    t.add(1, 0, 4 * b * b * al * ga);
    t.add(1, 0, -12 * b * c1 * c1 * al * ga);
    t.add(2, 0, -24 * a1 * b * c1 * al * ga);
    t.add(3, 0, -12 * a1 * a1 * b * al * ga);
    t.add(3, 0, sgn * 4 * b * al * al * al * ga);
    t.add(0, 1, -4 * b * b * be * ga);
    t.add(0, 1, 12 * b * c1 * c1 * be * ga);
    t.add(0, 2, 24 * b * b1 * c1 * be * ga);
    t.add(0, 3, 12 * b * b1 * b1 * be * ga);
    t.add(0, 3, -sgn * 4 * b * be * be * be * ga);
    t.add(1, 0, -12 * a1 * b * c1 * ga * ga);
    t.add(2, 0, -6 * a1 * a1 * b * ga * ga);
    t.add(0, 1, 12 * b * b1 * c1 * ga * ga);
    t.add(0, 2, 6 * b * b1 * b1 * ga * ga);
    t.add(2, 0, sgn * 6 * b * al * al * ga * ga);
    t.add(0, 2, -sgn * 6 * b * be * be * ga * ga);
    t.add(1, 0, sgn * 4 * b * al * ga * ga * ga);
    t.add(0, 1, -sgn * 4 * b * be * ga * ga * ga);
    return t.scaled(Rat(1) / (4 * b));
}

// Fifth and sixth family first-subcase forms.
BiPoly appendix_p79(const Rat& c, const Rat& mu, const AffineMap& m, int sgn) {
    const Rat &a1 = m.a1, &b1 = m.b1, &c1 = m.c1, &al = m.alpha1, &be = m.beta1, &ga = m.gamma1;
    TermSum t;
    t.add(1, 0, -4 * a1 * c * c1);
    t.add(1, 0, -4 * a1 * c1 * c1 * c1);
    t.add(2, 0, -2 * a1 * a1 * c);
    t.add(2, 0, -6 * a1 * a1 * c1 * c1);
    t.add(3, 0, -4 * a1 * a1 * a1 * c1);
    t.add(4, 0, -(a1 * a1 * a1 * a1));
    t.add(0, 1, 4 * b1 * c * c1);
    t.add(0, 1, 4 * b1 * c1 * c1 * c1);
    t.add(0, 2, 2 * b1 * b1 * c);
    t.add(0, 2, 6 * b1 * b1 * c1 * c1);
    t.add(0, 3, 4 * b1 * b1 * b1 * c1);
    t.add(0, 4, b1 * b1 * b1 * b1);
    t.add(4, 0, sgn * al * al * al * al);
    t.add(0, 4, -sgn * be * be * be * be);
    t.add(3, 0, sgn * 4 * al * al * al * ga);
    t.add(0, 3, -sgn * 4 * be * be * be * ga);
    t.add(2, 0, sgn * 6 * al * al * ga * ga);
    t.add(0, 2, -sgn * 6 * be * be * ga * ga);
    t.add(1, 0, sgn * 4 * al * ga * ga * ga);
    t.add(0, 1, -sgn * 4 * be * ga * ga * ga);
    t.add(2, 0, -6 * c1 * c1 * al * al * mu);
    t.add(3, 0, -12 * a1 * c1 * al * al * mu);
    t.add(4, 0, -6 * a1 * a1 * al * al * mu);
    t.add(0, 2, 6 * c1 * c1 * be * be * mu);
    t.add(0, 3, 12 * b1 * c1 * be * be * mu);
    t.add(0, 4, 6 * b1 * b1 * be * be * mu);
    t.add(1, 0, -12 * c1 * c1 * al * ga * mu);
    t.add(2, 0, -24 * a1 * c1 * al * ga * mu);
    t.add(3, 0, -12 * a1 * a1 * al * ga * mu);
    t.add(0, 1, 12 * c1 * c1 * be * ga * mu);
    t.add(0, 2, 24 * b1 * c1 * be * ga * mu);
    t.add(0, 3, 12 * b1 * b1 * be * ga * mu);
    t.add(1, 0, -12 * a1 * c1 * ga * ga * mu);
    t.add(2, 0, -6 * a1 * a1 * ga * ga * mu);
    t.add(0, 1, 12 * b1 * c1 * ga * ga * mu);
    t.add(0, 2, 6 * b1 * b1 * ga * ga * mu);
    return t.scaled(Rat(1, 4));
}

// Fifth and sixth family second-subcase forms.
BiPoly appendix_p810(const Rat& a, const Rat& b, const Rat& mu, const AffineMap& m, int sgn) {
    const Rat &a1 = m.a1, &b1 = m.b1, &c1 = m.c1, &al = m.alpha1, &be = m.beta1, &ga = m.gamma1;
    TermSum t;
    t.add(1, 0, 4 * a * a * a1 * c1);
    t.add(1, 0, -4 * a1 * b * c1 * c1 * c1);
    t.add(2, 0, 2 * a * a * a1 * a1);
    t.add(2, 0, -6 * a1 * a1 * b * c1 * c1);
    t.add(3, 0, -4 * a1 * a1 * a1 * b * c1);
    t.add(4, 0, -(a1 * a1 * a1 * a1 * b));
    t.add(0, 1, -4 * a * a * b1 * c1);
    t.add(0, 1, 4 * b * b1 * c1 * c1 * c1);
    t.add(0, 2, -2 * a * a * b1 * b1);
    t.add(0, 2, 6 * b * b1 * b1 * c1 * c1);
    t.add(0, 3, 4 * b * b1 * b1 * b1 * c1);
    t.add(0, 4, b * b1 * b1 * b1 * b1);
    t.add(1, 0, 4 * a * b * c1 * al);
    t.add(2, 0, 4 * a * a1 * b * al);
    t.add(2, 0, 2 * b * b * al * al);
    t.add(4, 0, sgn * b * al * al * al * al);
    t.add(0, 1, -4 * a * b * c1 * be);
    t.add(0, 2, -4 * a * b * b1 * be);
    t.add(0, 2, -2 * b * b * be * be);
    t.add(0, 4, -sgn * b * be * be * be * be);
    t.add(1, 0, 4 * a * a1 * b * ga);
    t.add(0, 1, -4 * a * b * b1 * ga);
    t.add(1, 0, 4 * b * b * al * ga);
    t.add(3, 0, sgn * 4 * b * al * al * al * ga);
    t.add(0, 1, -4 * b * b * be * ga);
    t.add(0, 3, -sgn * 4 * b * be * be * be * ga);
    t.add(2, 0, sgn * 6 * b * al * al * ga * ga);
    t.add(0, 2, -sgn * 6 * b * be * be * ga * ga);
    t.add(1, 0, sgn * 4 * b * al * ga * ga * ga);
    t.add(0, 1, -sgn * 4 * b * be * ga * ga * ga);
    t.add(2, 0, -6 * b * c1 * c1 * al * al * mu);
    t.add(3, 0, -12 * a1 * b * c1 * al * al * mu);
    t.add(4, 0, -6 * a1 * a1 * b * al * al * mu);
    t.add(0, 2, 6 * b * c1 * c1 * be * be * mu);
    t.add(0, 3, 12 * b * b1 * c1 * be * be * mu);
    t.add(0, 4, 6 * b * b1 * b1 * be * be * mu);
    t.add(1, 0, -12 * b * c1 * c1 * al * ga * mu);
    t.add(2, 0, -24 * a1 * b * c1 * al * ga * mu);
    t.add(3, 0, -12 * a1 * a1 * b * al * ga * mu);
    t.add(0, 1, 12 * b * c1 * c1 * be * ga * mu);
    t.add(0, 2, 24 * b * b1 * c1 * be * ga * mu);
    t.add(0, 3, 12 * b * b1 * b1 * be * ga * mu);
    t.add(1, 0, -12 * a1 * b * c1 * ga * ga * mu);
    t.add(2, 0, -6 * a1 * a1 * b * ga * ga * mu);
    t.add(0, 1, 12 * b * b1 * c1 * ga * ga * mu);
    t.add(0, 2, 6 * b * b1 * b1 * ga * ga * mu);
    return t.scaled(Rat(1) / (4 * b));
}

}  // namespace

BiPoly appendix_P(SaddleFamily f, const SaddleParams& p, const AffineMap& m) {
    // The closed forms never invert the affine map, so a singular map is
    // acceptable here; only the family conditions are enforced.
    ValidationReport r = validate(f, p, m);
    std::erase_if(r.violations,
                  [](const std::string& v) { return v == "b1*alpha1 - a1*beta1 != 0"; });
    if (!r.ok()) {
        std::string msg = "invalid " + family_name(f) + " parameters:";
        for (const auto& v : r.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    switch (f) {
        case SaddleFamily::N1: return appendix_p1(p);
        case SaddleFamily::N2: return appendix_p2(p, m);
        case SaddleFamily::N31: return appendix_p35(p.c, m, 1);
        case SaddleFamily::N41: return appendix_p35(p.c, m, -1);
        case SaddleFamily::N32: return appendix_p46(p.a, p.b, m, 1);
        case SaddleFamily::N42: return appendix_p46(p.a, p.b, m, -1);
        case SaddleFamily::N51: return appendix_p79(p.c, p.mu, m, 1);
        case SaddleFamily::N61: return appendix_p79(p.c, p.mu, m, -1);
        case SaddleFamily::N52: return appendix_p810(p.a, p.b, p.mu, m, 1);
        case SaddleFamily::N62: return appendix_p810(p.a, p.b, p.mu, m, -1);
    }
    throw std::logic_error("unreachable family tag");
}

namespace {

double mono_scale(const DenseBi<double>& d, double x, double y) {
    double best = 0, xp = 1;
    for (const auto& row : d.c) {
        double yp = 1;
        for (double cij : row) {
            best = std::max(best, std::abs(cij) * xp * yp);
            yp *= std::abs(y);
        }
        xp *= std::abs(x);
    }
    return best;
}

struct NumericPair {
    DenseBi<double> pl, pi, plx, ply, pix, piy;

    explicit NumericPair(const CrossingPolys& cp)
        : pl(to_dense<double>(cp.PL)),
          pi(to_dense<double>(cp.Pi)),
          plx(to_dense<double>(partial(cp.PL, 0))),
          ply(to_dense<double>(partial(cp.PL, 1))),
          pix(to_dense<double>(partial(cp.Pi, 0))),
          piy(to_dense<double>(partial(cp.Pi, 1))) {}

    // Full bivariate Newton; converges quadratically at simple solutions.
    void polish(double& x, double& y) const {
        for (int it = 0; it < 16; ++it) {
            double r1 = pl.eval(x, y), r2 = pi.eval(x, y);
            double a11 = plx.eval(x, y), a12 = ply.eval(x, y);
            double a21 = pix.eval(x, y), a22 = piy.eval(x, y);
            double det = a11 * a22 - a12 * a21;
            if (std::abs(det) < 1e-300) break;
            double dx = (r1 * a22 - r2 * a12) / det;
            double dy = (a11 * r2 - a21 * r1) / det;
            x -= dx;
            y -= dy;
            if (std::hypot(dx, dy) <= 1e-16 * (1 + std::hypot(x, y))) break;
        }
    }

    // For degenerate contacts the pair Jacobian is singular, so only x is
    // polished (on the quadratic, which stays regular off its vertex) and
    // y keeps its bisection-refined value.
    void polish_x_only(double& x, double y) const {
        for (int it = 0; it < 8; ++it) {
            double d = plx.eval(x, y);
            if (std::abs(d) < 1e-300) break;
            double step = pl.eval(x, y) / d;
            x -= step;
            if (std::abs(step) <= 1e-16 * (1 + std::abs(x))) break;
        }
    }

    CrossingSolution make_solution(double x, double y, int mult, double tol) const {
        CrossingSolution s;
        s.x = x;
        s.y = y;
        s.multiplicity = mult;
        s.residual_PL = std::abs(pl.eval(x, y)) / (1 + mono_scale(pl, x, y));
        s.residual_Pi = std::abs(pi.eval(x, y)) / (1 + mono_scale(pi, x, y));
        double a11 = plx.eval(x, y), a12 = ply.eval(x, y);
        double a21 = pix.eval(x, y), a22 = piy.eval(x, y);
        s.jacobian_det = a11 * a22 - a12 * a21;
        double grad_scale = std::hypot(a11, a12) * std::hypot(a21, a22);
        s.simple = (mult == 1) || std::abs(s.jacobian_det) > tol * (1 + grad_scale);
        // The eliminant multiplicity merges both quadratic branches, so a
        // repeated y-root can still be a transversal intersection; the
        // Jacobian test above settles it.
        s.multiplicity = s.simple ? 1 : mult;
        return s;
    }

    bool transversal_at(double x, double y, double tol) const {
        double a11 = plx.eval(x, y), a12 = ply.eval(x, y);
        double a21 = pix.eval(x, y), a22 = piy.eval(x, y);
        double det = a11 * a22 - a12 * a21;
        return std::abs(det) > tol * (1 + std::hypot(a11, a12) * std::hypot(a21, a22));
    }
};

// Positive roots of the exact gcd of two axis restrictions; these are the
// common zeros on one half-axis.
std::vector<std::pair<double, int>> positive_common_roots(const UniPoly& u, const UniPoly& v) {
    std::vector<std::pair<double, int>> out;
    UniPoly g = gcd_poly(u, v);
    if (g.degree() < 1) return out;
    for (const RootBracket& b : isolate_real_roots(g, Rat(0), cauchy_bound(g)))
        out.push_back({refine_root(g, b, 1e-15), b.multiplicity});
    return out;
}

void sort_solutions(std::vector<CrossingSolution>& v) {
    std::sort(v.begin(), v.end(), [](const CrossingSolution& a, const CrossingSolution& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
}

void dedupe_solutions(std::vector<CrossingSolution>& v) {
    std::vector<CrossingSolution> kept;
    for (const auto& s : v) {
        bool dup = false;
        for (const auto& k : kept)
            if (std::hypot(s.x - k.x, s.y - k.y) <= 1e-9) dup = true;
        if (!dup) kept.push_back(s);
    }
    v = std::move(kept);
}

}  // namespace

SolveResult solve_crossing(const CrossingPolys& cp, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    if (cp.PL.is_zero() || cp.Pi.is_zero())
        throw std::runtime_error("degenerate crossing polynomial");
    if (cp.PL.degx() != 2 || cp.PL.coeff_in_x(2).degree() != 0)
        throw std::invalid_argument(
            "center crossing polynomial must be quadratic in x with constant leading coefficient");

    UniPoly R = resultant_x(cp.PL, cp.Pi);
    if (R.is_zero()) throw std::runtime_error("non-isolated solution curve");

    // Remove the y^k factor carrying the origin (and any other y = 0
    // solutions); the half-axes are handled exactly below.
    std::vector<Rat> rc = R.coeffs();
    std::size_t k = 0;
    while (k < rc.size() && rc[k] == 0) ++k;
    UniPoly r_pos(std::vector<Rat>(rc.begin() + k, rc.end()));

    NumericPair num(cp);
    SolveResult out;

    for (auto [x0, mult] : positive_common_roots(cp.PL.restrict_y0(), cp.Pi.restrict_y0()))
        out.boundary.push_back(num.make_solution(x0, 0.0, mult, tol));
    for (auto [y0, mult] : positive_common_roots(cp.PL.restrict_x0(), cp.Pi.restrict_x0()))
        out.boundary.push_back(num.make_solution(0.0, y0, mult, tol));

    // Exact coefficients of PL as a monic-up-to-constant quadratic in x.
    const Rat lead = cp.PL.coeff_in_x(2).coeff(0);
    const UniPoly c1 = cp.PL.coeff_in_x(1);
    const UniPoly c0 = cp.PL.coeff_in_x(0);
    const double A = to_double(lead);

    if (r_pos.degree() >= 1) {
        for (const RootBracket& br : isolate_real_roots(r_pos, Rat(0), cauchy_bound(r_pos))) {
            double y0 = refine_root(r_pos, br, 1e-15);
            double B = c1.eval_d(y0), C = c0.eval_d(y0);
            double disc = B * B - 4 * A * C;
            double disc_scale = B * B + std::abs(4 * A * C);
            if (disc < -1e-12 * disc_scale) continue;
            if (disc < 0) disc = 0;
            double q = -(B + std::copysign(std::sqrt(disc), B == 0 ? 1.0 : B)) / 2;
            double roots[2] = {q / A, q != 0 ? C / q : q / A};
            for (double x0 : roots) {
                if (x0 <= 1e-9 * (1 + std::abs(y0))) continue;
                double pi_val = std::abs(num.pi.eval(x0, y0));
                if (pi_val > tol * (1 + mono_scale(num.pi, x0, y0))) continue;
                double x = x0, y = y0;
                if (br.multiplicity == 1 || num.transversal_at(x, y, tol))
                    num.polish(x, y);
                else
                    num.polish_x_only(x, y);
                if (!(x > 0) || !(y > 0)) continue;
                CrossingSolution s = num.make_solution(x, y, br.multiplicity, tol);
                if (s.simple && std::max(s.residual_PL, s.residual_Pi) > 100 * tol)
                    continue;
                out.admissible.push_back(s);
            }
        }
    }

    sort_solutions(out.admissible);
    dedupe_solutions(out.admissible);
    sort_solutions(out.boundary);
    dedupe_solutions(out.boundary);
    return out;
}

CountReport count_report(const CrossingPolys& cp, double tol) {
    CountReport rep;
    rep.resultant_degree = resultant_x(cp.PL, cp.Pi).degree();
    rep.admissible_count = static_cast<int>(solve_crossing(cp, tol).admissible.size());
    return rep;
}

}  // namespace crosscycle
