#pragma once

#include <vector>

#include "crosscycle/poly.hpp"

namespace crosscycle {

// Isolating interval for one distinct real root. Endpoints are exact dyadic
// rationals with lo < hi and u nonzero at both; sign_lo/sign_hi are the signs
// of u there (equal for even multiplicity). multiplicity is the root's
// multiplicity in the input polynomial.
struct RootBracket {
    Rat lo, hi;
    int sign_lo = 0;
    int sign_hi = 0;
    int multiplicity = 1;
};

// Returns disjoint brackets, sorted by lo, covering every real root of u in
// (lo, hi], one distinct root per bracket. Sturm bisection on the square-free
// part; multiplicities recovered from the Yun decomposition. Throws
// std::invalid_argument for the zero polynomial or an empty interval.
std::vector<RootBracket> isolate_real_roots(const UniPoly& u, const Rat& lo, const Rat& hi);

// Shrinks an isolating bracket by exact bisection to width <= tol, then
// polishes with a few guarded Newton steps in double precision. Throws
// std::invalid_argument("non-isolating bracket") when the square-free part
// does not change sign across the bracket.
double refine_root(const UniPoly& u, const RootBracket& b, double tol);

}  // namespace crosscycle
