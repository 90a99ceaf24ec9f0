#pragma once

#include <vector>

#include "crosscycle/families.hpp"
#include "crosscycle/poly.hpp"

namespace crosscycle {

// Where a crossing-polynomial pair came from.
enum class Provenance { Generated, Appendix, Explicit };

// The pair whose common positive zeros are the crossing-cycle corner points:
// PL from the center integral, Pi from the saddle integral, both formed as
// H(x, 0) - H(0, y) and therefore separable with a zero at the origin.
struct CrossingPolys {
    BiPoly PL;
    BiPoly Pi;
    Provenance provenance = Provenance::Generated;
};

// H(x, 0) - H(0, y) as a bivariate polynomial (mixed monomials all vanish).
BiPoly crossing_difference(const BiPoly& H);

// Builds both crossing polynomials from a piecewise system. Throws
// std::runtime_error("degenerate crossing polynomial") when either
// difference collapses to the zero polynomial.
CrossingPolys build_crossing_polys(const PiecewiseSystem& sys);

// Literal closed-form crossing polynomial for the family, transcribed
// term by term. The first family's closed form carries no affine
// parameters and is the normal-form (identity map) expression; all others
// use the full parameter set. Throws like H_saddle when validate fails.
BiPoly appendix_P(SaddleFamily f, const SaddleParams& p, const AffineMap& m);

// One isolated common zero. multiplicity is the multiplicity of the
// eliminated root behind this solution (merged across the two quadratic
// branches, so > 1 flags a degenerate contact rather than counting it
// exactly); simple means the pair Jacobian is nonsingular there. Residuals
// are normalized by the largest monomial magnitude at the point.
struct CrossingSolution {
    double x = 0, y = 0;
    double residual_PL = 0, residual_Pi = 0;
    double jacobian_det = 0;
    bool simple = true;
    int multiplicity = 1;
};

// admissible holds the strictly positive solutions, boundary the nonzero
// solutions on the two half-axes. Both sorted by x, then y.
struct SolveResult {
    std::vector<CrossingSolution> admissible;
    std::vector<CrossingSolution> boundary;
};

// Complete solve over the closed positive quadrant minus the origin:
// resultant elimination of x, Sturm isolation of the positive roots,
// exact quadratic back-substitution, spurious-pair rejection, Newton
// polish, deduplication. Throws std::runtime_error("non-isolated solution
// curve") when the two polynomials share a component. Roots flagged with
// multiplicity > 1 are always reported, never dropped.
SolveResult solve_crossing(const CrossingPolys& cp, double tol);

struct CountReport {
    int bezout_bound = 8;
    int resultant_degree = 0;
    int admissible_count = 0;
};

CountReport count_report(const CrossingPolys& cp, double tol = 1e-9);

}  // namespace crosscycle
