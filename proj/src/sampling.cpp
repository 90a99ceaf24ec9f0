#include "crosscycle/sampling.hpp"

namespace crosscycle {

Rat sample_rat(std::mt19937& rng) {
    int n = static_cast<int>(rng() % 49u) - 24;
    if (n == 0) n = 5;
    return frac(n, 8);
}

Rat sample_positive_rat(std::mt19937& rng) {
    Rat r = sample_rat(rng);
    return r < 0 ? Rat(-r) : r;
}

SaddleParams sample_params(SaddleFamily f, std::mt19937& rng) {
    switch (f) {
        case SaddleFamily::N1: return {sample_rat(rng), -sample_positive_rat(rng), Rat(0), Rat(0)};
        case SaddleFamily::N2:
            return {sample_positive_rat(rng), sample_positive_rat(rng), Rat(0), Rat(0)};
        case SaddleFamily::N31: return {Rat(0), Rat(0), -sample_positive_rat(rng), Rat(0)};
        case SaddleFamily::N32: {
            Rat b = sample_positive_rat(rng);
            return {3 * b, b, Rat(0), Rat(0)};
        }
        case SaddleFamily::N41: return {Rat(0), Rat(0), sample_positive_rat(rng), Rat(0)};
        case SaddleFamily::N42: return {sample_rat(rng), -sample_positive_rat(rng), Rat(0), Rat(0)};
        case SaddleFamily::N51: return {Rat(0), Rat(0), -sample_positive_rat(rng), sample_rat(rng)};
        case SaddleFamily::N52: {
            Rat a = sample_positive_rat(rng), b = sample_positive_rat(rng);
            Rat mu = (a * a * a * a - b * b * b * b - b) / (6 * a * a * b * b);
            return {a, b, Rat(0), mu};
        }
        case SaddleFamily::N61: return {Rat(0), Rat(0), sample_positive_rat(rng), sample_rat(rng)};
        case SaddleFamily::N62: {
            Rat a = sample_positive_rat(rng), b = sample_positive_rat(rng);
            Rat mu = -(a * a * a * a + b * b * b * b + b) / (6 * a * a * b * b);
            return {a, b, Rat(0), mu};
        }
    }
    return {};
}

AffineMap sample_affine(std::mt19937& rng) {
    for (;;) {
        AffineMap m{sample_rat(rng), sample_rat(rng), sample_rat(rng),
                    sample_rat(rng), sample_rat(rng), sample_rat(rng)};
        if (m.b1 * m.alpha1 - m.a1 * m.beta1 != 0) return m;
    }
}

LinearCenterParams sample_center(std::mt19937& rng) {
    return {sample_rat(rng), sample_rat(rng), sample_rat(rng), sample_positive_rat(rng), 1};
}

PiecewiseSystem sample_system(SaddleFamily f, std::mt19937& rng) {
    LinearCenterParams center = sample_center(rng);
    SaddleParams p = sample_params(f, rng);
    AffineMap m = sample_affine(rng);
    return PiecewiseSystem::from_params(center, f, p, m);
}

double sample_coord(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() % 1000001u) / 1e6;
}

}  // namespace crosscycle
