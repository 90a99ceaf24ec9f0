#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "crosscycle/crossing.hpp"
#include "crosscycle/registry.hpp"

using namespace crosscycle;

TEST_CASE("registry holds the ten examples in family order") {
    const auto& reg = example_registry();
    REQUIRE(reg.size() == 10);
    for (std::size_t i = 0; i < reg.size(); ++i) {
        CHECK(reg[i].id == family_name(reg[i].family));
        CHECK(reg[i].family == all_families()[i]);
    }
}

TEST_CASE("lookup by id returns the entry or rejects the id") {
    CHECK(example_by_id("N62").family == SaddleFamily::N62);
    CHECK(example_by_id("N1").id == "N1");
    CHECK_THROWS_WITH_AS(example_by_id("Z9"), "unknown example id: Z9", std::invalid_argument);
}

TEST_CASE("every entry keeps its fields first integrals on both sides") {
    std::mt19937 rng(0xf00du);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::vector<std::array<double, 2>> pts;
    for (int i = 0; i < 100; ++i) pts.push_back({coord(rng), coord(rng)});

    for (const ExampleEntry& e : example_registry()) {
        CAPTURE(e.id);
        CHECK(hamiltonian_residual(e.system.H_minus, e.system.F_minus, pts) <= 1e-10);
        CHECK(hamiltonian_residual(e.system.H_plus, e.system.F_plus, pts) <= 1e-10);
    }
}

TEST_CASE("expected pairs are strictly positive and ascend in x") {
    for (const ExampleEntry& e : example_registry()) {
        CAPTURE(e.id);
        for (const auto& [x, y] : e.expected) {
            CHECK(x > 0);
            CHECK(y > 0);
        }
        for (int k = 0; k < 3; ++k) CHECK(e.expected[k][0] < e.expected[k + 1][0]);
    }
}

TEST_CASE("solving each entry reproduces the four published pairs") {
    for (const ExampleEntry& e : example_registry()) {
        CAPTURE(e.id);
        CrossingPolys cp = build_crossing_polys(e.system);
        SolveResult r = solve_crossing(cp, 1e-9);
        REQUIRE(r.admissible.size() == 4);
        for (int k = 0; k < 4; ++k) {
            const CrossingSolution& s = r.admissible[k];
            CHECK(std::abs(s.x - e.expected[k][0]) <= 1e-4);
            CHECK(std::abs(s.y - e.expected[k][1]) <= 1e-4);
            CHECK(s.simple);
            CHECK(s.residual_PL <= 1e-10);
            CHECK(s.residual_Pi <= 1e-10);
        }
    }
}
