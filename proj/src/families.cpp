#include "crosscycle/families.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace crosscycle {

namespace {

const Rat kZero(0);

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << sep;
        out << parts[i];
    }
    return out.str();
}

bool uses_quadratic_tail(SaddleFamily f) {
    switch (f) {
        case SaddleFamily::N1:
        case SaddleFamily::N2:
        case SaddleFamily::N32:
        case SaddleFamily::N42:
        case SaddleFamily::N52:
        case SaddleFamily::N62:
            return true;
        default:
            return false;
    }
}

// (a^2/(2b)) x^2 + (b/2) y^2 + a x y, the common quadratic part of the
// first integrals whose linear part has both a and b active.
BiPoly quadratic_tail(const SaddleParams& p) {
    Rat half_a2_b = p.a * p.a / (Rat(2) * p.b);
    return BiPoly::monomial(2, 0, half_a2_b) + BiPoly::monomial(0, 2, p.b / Rat(2)) +
           BiPoly::monomial(1, 1, p.a);
}

BiPoly degenerate_head(const Rat& c) {
    // -(c/2) x^2, the quadratic part when a = b = 0.
    return BiPoly::monomial(2, 0, -c / Rat(2));
}

}  // namespace

std::string family_name(SaddleFamily f) {
    switch (f) {
        case SaddleFamily::N1: return "N1";
        case SaddleFamily::N2: return "N2";
        case SaddleFamily::N31: return "N31";
        case SaddleFamily::N32: return "N32";
        case SaddleFamily::N41: return "N41";
        case SaddleFamily::N42: return "N42";
        case SaddleFamily::N51: return "N51";
        case SaddleFamily::N52: return "N52";
        case SaddleFamily::N61: return "N61";
        case SaddleFamily::N62: return "N62";
    }
    throw std::logic_error("unreachable family tag");
}

std::optional<SaddleFamily> family_from_name(const std::string& name) {
    for (SaddleFamily f : all_families())
        if (family_name(f) == name) return f;
    return std::nullopt;
}

std::vector<SaddleFamily> all_families() {
    return {SaddleFamily::N1,  SaddleFamily::N2,  SaddleFamily::N31, SaddleFamily::N32,
            SaddleFamily::N41, SaddleFamily::N42, SaddleFamily::N51, SaddleFamily::N52,
            SaddleFamily::N61, SaddleFamily::N62};
}

ValidationReport validate(SaddleFamily f, const SaddleParams& p, const AffineMap& m) {
    ValidationReport r;
    auto need = [&](bool ok, const char* name) {
        if (!ok) r.violations.push_back(name);
    };
    auto unused = [&](const Rat& v, const char* name) {
        if (v != kZero) r.violations.push_back(std::string(name) + " = 0 (unused)");
    };

    switch (f) {
        case SaddleFamily::N1:
            need(p.b < kZero, "b < 0");
            unused(p.c, "c");
            unused(p.mu, "mu");
            break;
        case SaddleFamily::N2:
            need(p.a > kZero, "a > 0");
            need(p.b != kZero, "b != 0");
            if (p.b < kZero) r.warnings.push_back("b < 0 flips the quadratic part of H");
            unused(p.c, "c");
            unused(p.mu, "mu");
            break;
        case SaddleFamily::N31:
            need(p.a == kZero, "a = 0");
            need(p.b == kZero, "b = 0");
            need(p.c < kZero, "c < 0");
            unused(p.mu, "mu");
            break;
        case SaddleFamily::N32:
            need(p.c == kZero, "c = 0");
            need(p.a * p.b != kZero, "a*b != 0");
            if (p.b != kZero) need(p.a * p.a / p.b - Rat(6) * p.b > kZero, "a^2/b - 6*b > 0");
            unused(p.mu, "mu");
            break;
        case SaddleFamily::N41:
            need(p.a == kZero, "a = 0");
            need(p.b == kZero, "b = 0");
            need(p.c > kZero, "c > 0");
            unused(p.mu, "mu");
            break;
        case SaddleFamily::N42:
            need(p.c == kZero, "c = 0");
            need(p.a != kZero, "a != 0");
            need(p.b < kZero, "b < 0");
            unused(p.mu, "mu");
            break;
        case SaddleFamily::N51:
            need(p.a == kZero, "a = 0");
            need(p.b == kZero, "b = 0");
            need(p.c < kZero, "c < 0");
            break;
        case SaddleFamily::N52: {
            need(p.c == kZero, "c = 0");
            need(p.b != kZero, "b != 0");
            Rat quartic = p.a * p.a * p.a * p.a - p.b * p.b * p.b * p.b -
                          Rat(6) * p.a * p.a * p.b * p.b * p.mu;
            if (p.b != kZero) need(quartic / p.b > kZero, "(a^4 - b^4 - 6*a^2*b^2*mu)/b > 0");
            break;
        }
        case SaddleFamily::N61:
            need(p.a == kZero, "a = 0");
            need(p.b == kZero, "b = 0");
            need(p.c > kZero, "c > 0");
            break;
        case SaddleFamily::N62: {
            need(p.c == kZero, "c = 0");
            need(p.b != kZero, "b != 0");
            Rat quartic = p.a * p.a * p.a * p.a + p.b * p.b * p.b * p.b +
                          Rat(6) * p.a * p.a * p.b * p.b * p.mu;
            if (p.b != kZero) need(quartic / p.b < kZero, "(a^4 + b^4 + 6*a^2*b^2*mu)/b < 0");
            break;
        }
    }

    if (m.b1 * m.alpha1 - m.a1 * m.beta1 == kZero)
        r.violations.push_back("b1*alpha1 - a1*beta1 != 0");
    return r;
}

ValidationReport validate_center(const LinearCenterParams& p) {
    ValidationReport r;
    if (!(p.omega > kZero)) r.violations.push_back("omega > 0");
    if (p.sign != 1 && p.sign != -1) r.violations.push_back("sign in {+1, -1}");
    return r;
}

BiPoly H_center(const LinearCenterParams& p) {
    BiPoly ayx = BiPoly::linear(Rat(0), Rat(1), p.A);
    BiPoly H = ayx * ayx + BiPoly::linear(Rat(0), Rat(2) * p.C, Rat(-2) * p.B) +
               BiPoly::monomial(0, 2, p.omega * p.omega);
    return H * Rat(p.sign);
}

std::pair<BiPoly, BiPoly> F_center(const LinearCenterParams& p) {
    Rat k = p.A * p.A + p.omega * p.omega;
    BiPoly fx = BiPoly::linear(p.B, -p.A, -k);
    BiPoly fy = BiPoly::linear(p.C, Rat(1), p.A);
    return {fx * Rat(p.sign), fy * Rat(p.sign)};
}

BiPoly normal_form_H(SaddleFamily f, const SaddleParams& p) {
    if (uses_quadratic_tail(f) && p.b == kZero)
        throw std::invalid_argument("b must be nonzero for this family");
    const Rat q(1, 4);
    const Rat mh = Rat(-3) / Rat(2);
    BiPoly x4 = BiPoly::monomial(4, 0, q);
    BiPoly y4 = BiPoly::monomial(0, 4, q);
    BiPoly x2y2 = BiPoly::monomial(2, 2, Rat(1));
    switch (f) {
        case SaddleFamily::N1:
            return -x4 + quadratic_tail(p);
        case SaddleFamily::N2:
            return BiPoly::monomial(3, 1, Rat(-1)) + quadratic_tail(p);
        case SaddleFamily::N31:
            return y4 + x2y2 * mh + degenerate_head(p.c);
        case SaddleFamily::N32:
            return y4 + x2y2 * mh + quadratic_tail(p);
        case SaddleFamily::N41:
            return -y4 + x2y2 * mh + degenerate_head(p.c);
        case SaddleFamily::N42:
            return -y4 + x2y2 * mh + quadratic_tail(p);
        case SaddleFamily::N51:
            return y4 - x4 + x2y2 * (mh * p.mu) + degenerate_head(p.c);
        case SaddleFamily::N52:
            return y4 - x4 + x2y2 * (mh * p.mu) + quadratic_tail(p);
        case SaddleFamily::N61:
            return -y4 - x4 + x2y2 * (mh * p.mu) + degenerate_head(p.c);
        case SaddleFamily::N62:
            return -y4 - x4 + x2y2 * (mh * p.mu) + quadratic_tail(p);
    }
    throw std::logic_error("unreachable family tag");
}

std::pair<BiPoly, BiPoly> normal_form_F(SaddleFamily f, const SaddleParams& p) {
    BiPoly H = normal_form_H(f, p);
    return {H.dy(), -H.dx()};
}

namespace {

void require_valid(SaddleFamily f, const SaddleParams& p, const AffineMap& m) {
    ValidationReport r = validate(f, p, m);
    if (!r.ok())
        throw std::invalid_argument("invalid " + family_name(f) +
                                    " parameters: " + join(r.violations, "; "));
}

std::pair<BiPoly, BiPoly> affine_forms(const AffineMap& m) {
    return {BiPoly::linear(m.c1, m.a1, m.b1), BiPoly::linear(m.gamma1, m.alpha1, m.beta1)};
}

}  // namespace

BiPoly H_saddle(SaddleFamily f, const SaddleParams& p, const AffineMap& m) {
    require_valid(f, p, m);
    auto [u, v] = affine_forms(m);
    return normal_form_H(f, p).substitute(u, v);
}

std::pair<BiPoly, BiPoly> F_saddle(SaddleFamily f, const SaddleParams& p, const AffineMap& m) {
    require_valid(f, p, m);
    auto [u, v] = affine_forms(m);
    auto nf = normal_form_F(f, p);
    BiPoly g1 = nf.first.substitute(u, v);
    BiPoly g2 = nf.second.substitute(u, v);
    // Pull the field back through the linear part of the map.
    Rat inv_det = Rat(1) / (m.b1 * m.alpha1 - m.a1 * m.beta1);
    BiPoly fx = (g1 * (-m.beta1) + g2 * m.b1) * inv_det;
    BiPoly fy = (g1 * m.alpha1 + g2 * (-m.a1)) * inv_det;
    return {fx, fy};
}

double hamiltonian_residual(const BiPoly& H, const std::pair<BiPoly, BiPoly>& F,
                            const std::vector<std::array<double, 2>>& pts) {
    auto hx = to_dense<double>(H.dx());
    auto hy = to_dense<double>(H.dy());
    auto f1 = to_dense<double>(F.first);
    auto f2 = to_dense<double>(F.second);
    double worst = 0.0;
    for (const auto& pt : pts) {
        double gx = hx.eval(pt[0], pt[1]);
        double gy = hy.eval(pt[0], pt[1]);
        double v1 = f1.eval(pt[0], pt[1]);
        double v2 = f2.eval(pt[0], pt[1]);
        double num = std::abs(gx * v1 + gy * v2);
        double den = 1.0 + std::hypot(gx, gy) * std::hypot(v1, v2);
        worst = std::max(worst, num / den);
    }
    return worst;
}

PiecewiseSystem PiecewiseSystem::from_params(const LinearCenterParams& center, SaddleFamily f,
                                             const SaddleParams& p, const AffineMap& m) {
    ValidationReport rc = validate_center(center);
    if (!rc.ok())
        throw std::invalid_argument("invalid center parameters: " + join(rc.violations, "; "));
    PiecewiseSystem sys;
    sys.H_minus = H_center(center);
    sys.F_minus = F_center(center);
    sys.H_plus = H_saddle(f, p, m);
    sys.F_plus = F_saddle(f, p, m);
    sys.family = f;
    sys.saddle_params = p;
    sys.affine = m;
    return sys;
}

PiecewiseSystem PiecewiseSystem::explicit_forms(BiPoly H_minus, std::pair<BiPoly, BiPoly> F_minus,
                                                BiPoly H_plus, std::pair<BiPoly, BiPoly> F_plus) {
    // Fixed probe grid over [-2,2]^2; a transcription slip in any single
    // coefficient shows up here at order one.
    std::vector<std::array<double, 2>> grid;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) grid.push_back({-2.0 + i, -2.0 + j});
    auto check = [&](const BiPoly& H, const std::pair<BiPoly, BiPoly>& F, const char* side) {
        double res = hamiltonian_residual(H, F, grid);
        if (res > 1e-10) {
            std::ostringstream msg;
            msg << "first integral mismatch on the " << side << " side (residual " << res << ")";
            throw std::invalid_argument(msg.str());
        }
    };
    check(H_minus, F_minus, "center");
    check(H_plus, F_plus, "saddle");
    PiecewiseSystem sys;
    sys.H_minus = std::move(H_minus);
    sys.F_minus = std::move(F_minus);
    sys.H_plus = std::move(H_plus);
    sys.F_plus = std::move(F_plus);
    return sys;
}

}  // namespace crosscycle
