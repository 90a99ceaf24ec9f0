#pragma once

#include <array>
#include <string>
#include <vector>

#include "crosscycle/families.hpp"

namespace crosscycle {

// One published piecewise system, stored verbatim as explicit coefficient
// forms (vector field and first integral on both sides) together with its
// four expected crossing pairs, ascending in x.
struct ExampleEntry {
    std::string id;
    SaddleFamily family;
    PiecewiseSystem system;
    std::array<std::array<double, 2>, 4> expected;
};

// All ten examples, in family order. Built once; construction runs the
// first-integral consistency guard on every entry.
const std::vector<ExampleEntry>& example_registry();

// Ids follow family_name: N1, N2, N31, ..., N62.
const ExampleEntry& example_by_id(const std::string& id);

}  // namespace crosscycle
