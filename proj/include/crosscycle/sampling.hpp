#pragma once

#include <random>

#include "crosscycle/families.hpp"

namespace crosscycle {

// Reproducible random inputs for stress checks and the appendix comparison
// command. Draws avoid std::uniform_int_distribution so that a fixed seed
// yields the same sequence on every standard library.

// Uniform in {-24/8, ..., 24/8} with 0 remapped to 5/8.
Rat sample_rat(std::mt19937& rng);
Rat sample_positive_rat(std::mt19937& rng);

// Parameters satisfying every family constraint: sign conditions, the
// coupled subcase relations for the second forms of families five and six,
// and a = b = 0 where the subcase requires it.
SaddleParams sample_params(SaddleFamily f, std::mt19937& rng);

// Nonsingular affine change of variables (resamples until the determinant
// b1*alpha1 - a1*beta1 is nonzero).
AffineMap sample_affine(std::mt19937& rng);

LinearCenterParams sample_center(std::mt19937& rng);

// Full piecewise system: random center, random saddle parameters, random
// affine map.
PiecewiseSystem sample_system(SaddleFamily f, std::mt19937& rng);

// Uniform double on [lo, hi], quantized to one millionth of the range.
double sample_coord(std::mt19937& rng, double lo, double hi);

}  // namespace crosscycle
