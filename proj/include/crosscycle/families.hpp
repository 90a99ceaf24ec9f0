#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crosscycle/poly.hpp"

namespace crosscycle {

// The six nilpotent-saddle families; families 3 through 6 split into two
// parameter subcases with distinct first integrals.
enum class SaddleFamily { N1, N2, N31, N32, N41, N42, N51, N52, N61, N62 };

// "N1" .. "N62".
std::string family_name(SaddleFamily f);
std::optional<SaddleFamily> family_from_name(const std::string& name);
std::vector<SaddleFamily> all_families();

// Linear center on the Sigma^- side:
//   x' = -(A^2 + omega^2) y - A x + B,   y' = A y + x + C,
// with first integral H = (A y + x)^2 + 2(C x - B y) + omega^2 y^2.
// sign is a global scale (+1 or -1) applied to both H and F so that systems
// printed with a negated first integral can be represented verbatim.
struct LinearCenterParams {
    Rat A, B, C, omega;
    int sign = 1;
};

// Saddle-side parameters; entries a family does not use must be zero.
struct SaddleParams {
    Rat a, b, c, mu;
};

// Affine change of variables u = c1 + a1 x + b1 y, v = gamma1 + alpha1 x +
// beta1 y carrying the normal form into the coordinates where Sigma is the
// pair of positive half-axes. Requires b1*alpha1 - a1*beta1 != 0.
struct AffineMap {
    Rat a1, b1, c1, alpha1, beta1, gamma1;
};

// Unsatisfied constraints are reported by name, not thrown: callers decide
// whether a violation is fatal. Warnings flag legal but unusual inputs.
struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(SaddleFamily f, const SaddleParams& p, const AffineMap& m);
ValidationReport validate_center(const LinearCenterParams& p);

// First integral and vector field of the center, as exact polynomials.
BiPoly H_center(const LinearCenterParams& p);
std::pair<BiPoly, BiPoly> F_center(const LinearCenterParams& p);

// Family first integral in normal-form coordinates (identity affine map),
// e.g. -x^4/4 + (a^2/(2b)) x^2 + (b/2) y^2 + a x y for the first family.
BiPoly normal_form_H(SaddleFamily f, const SaddleParams& p);
// Hamiltonian field (dH/dy, -dH/dx) of normal_form_H.
std::pair<BiPoly, BiPoly> normal_form_F(SaddleFamily f, const SaddleParams& p);

// Transformed first integral H(x, y) = H_normal(u, v) and the matching field
// M^{-1} F_normal(u, v), where M is the linear part of the affine map. Throw
// std::invalid_argument listing the violations when validate fails.
BiPoly H_saddle(SaddleFamily f, const SaddleParams& p, const AffineMap& m);
std::pair<BiPoly, BiPoly> F_saddle(SaddleFamily f, const SaddleParams& p, const AffineMap& m);

// max over pts of |grad(H) . F| / (1 + |grad(H)| |F|), evaluated in double
// precision with exact polynomial gradients. Zero for a genuine first
// integral up to roundoff; a transcription error shows up at order one.
double hamiltonian_residual(const BiPoly& H, const std::pair<BiPoly, BiPoly>& F,
                            const std::vector<std::array<double, 2>>& pts);

// One discontinuous system: the center fields govern the Sigma^- side
// (complement of the open first quadrant), the saddle fields the Sigma^+
// side. Both sides are stored as explicit polynomials; family/params
// provenance is kept when the system was built from parameters.
struct PiecewiseSystem {
    BiPoly H_minus;
    std::pair<BiPoly, BiPoly> F_minus;
    BiPoly H_plus;
    std::pair<BiPoly, BiPoly> F_plus;
    std::optional<SaddleFamily> family;
    std::optional<SaddleParams> saddle_params;
    std::optional<AffineMap> affine;

    static PiecewiseSystem from_params(const LinearCenterParams& center, SaddleFamily f,
                                       const SaddleParams& p, const AffineMap& m);
    // Verbatim coefficient mode. Each (H, F) pair is checked with
    // hamiltonian_residual on a fixed probe grid; a residual above 1e-10
    // throws std::invalid_argument naming the offending side.
    static PiecewiseSystem explicit_forms(BiPoly H_minus, std::pair<BiPoly, BiPoly> F_minus,
                                          BiPoly H_plus, std::pair<BiPoly, BiPoly> F_plus);
};

}  // namespace crosscycle
