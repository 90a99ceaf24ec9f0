#pragma once

#include <gmpxx.h>

#include <string>

namespace crosscycle {

// Exact rational scalar. All polynomial construction and elimination runs on
// these; doubles appear only in root refinement and ODE integration.
using Rat = mpq_class;

// Parses "p/q", integers, plain decimals ("0.25", "-1.5e-3") into an exact
// rational. Throws std::invalid_argument on anything else.
Rat rat_from_string(const std::string& s);

// Exact dyadic conversion; every finite double is a rational.
Rat rat_from_double(double d);

double to_double(const Rat& r);

std::string rat_to_string(const Rat& r);

// mpq_class(num, den) does not canonicalize; this always does.
inline Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace crosscycle
