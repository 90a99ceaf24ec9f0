#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "brute_force.hpp"
#include "crosscycle/crossing.hpp"
#include "crosscycle/families.hpp"
#include "crosscycle/sampling.hpp"

using namespace crosscycle;

namespace {

const AffineMap kIdentity{Rat(1), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)};

std::mt19937 rng(0x77aa11u);

Rat rnd_rat() { return sample_rat(rng); }
SaddleParams valid_draw(SaddleFamily f) { return sample_params(f, rng); }
AffineMap random_affine() { return sample_affine(rng); }
LinearCenterParams random_center() { return sample_center(rng); }

CrossingPolys toy_pair() {
    CrossingPolys cp;
    cp.PL = BiPoly::monomial(2, 0, Rat(1)) - BiPoly::monomial(0, 2, Rat(1));
    cp.Pi = BiPoly::monomial(4, 0, Rat(1)) + BiPoly::monomial(0, 4, Rat(1)) - BiPoly::constant(Rat(2));
    cp.provenance = Provenance::Explicit;
    return cp;
}

}  // namespace

TEST_CASE("crossing difference drops mixed terms and matches the axis restrictions") {
    for (int draw = 0; draw < 5; ++draw) {
        BiPoly H = H_saddle(SaddleFamily::N2, valid_draw(SaddleFamily::N2), random_affine());
        BiPoly D = crossing_difference(H);
        for (int i = 1; i <= D.degx(); ++i)
            for (int j = 1; j <= D.degy(); ++j) CHECK(D.coeff(i, j) == 0);
        CHECK(D.eval(Rat(0), Rat(0)) == 0);
        for (int pt = 0; pt < 5; ++pt) {
            Rat x = rnd_rat(), y = rnd_rat();
            CHECK(D.eval(x, y) == H.eval(x, Rat(0)) - H.eval(Rat(0), y));
        }
    }
}

TEST_CASE("circular center yields the difference of squares") {
    LinearCenterParams circle{Rat(0), Rat(0), Rat(0), Rat(1), 1};
    SaddleParams p{Rat(0), Rat(-1), Rat(0), Rat(0)};
    auto sys = PiecewiseSystem::from_params(circle, SaddleFamily::N1, p, kIdentity);
    CrossingPolys cp = build_crossing_polys(sys);

    BiPoly expected_pl = BiPoly::monomial(2, 0, Rat(1)) - BiPoly::monomial(0, 2, Rat(1));
    CHECK(cp.PL == expected_pl);

    BiPoly expected_pi = BiPoly::monomial(4, 0, frac(-1, 4)) + BiPoly::monomial(0, 2, frac(1, 2));
    CHECK(cp.Pi == expected_pi);
    CHECK(cp.Pi == appendix_P(SaddleFamily::N1, p, kIdentity));
    CHECK(cp.provenance == Provenance::Generated);
}

TEST_CASE("identically zero first integral is rejected") {
    BiPoly H_minus = BiPoly::monomial(2, 0, Rat(1)) + BiPoly::monomial(0, 2, Rat(1));
    auto F_minus = std::make_pair(BiPoly::monomial(0, 1, Rat(2)), BiPoly::monomial(1, 0, Rat(-2)));
    auto sys = PiecewiseSystem::explicit_forms(H_minus, F_minus, BiPoly{}, {BiPoly{}, BiPoly{}});
    CHECK_THROWS_WITH_AS(build_crossing_polys(sys), "degenerate crossing polynomial",
                         std::runtime_error);
}

TEST_CASE("first appendix form follows the printed substitution") {
    BiPoly P = appendix_P(SaddleFamily::N1, {Rat(1), Rat(-1), Rat(0), Rat(0)}, kIdentity);
    CHECK(P.eval(Rat(1), Rat(1)) == frac(-1, 4));
}

TEST_CASE("third appendix form with a1 = b1 = 0 keeps only the map parameters") {
    AffineMap flat{Rat(0), Rat(0), frac(3, 2), frac(4, 5), frac(-7, 8), frac(1, 3)};
    SaddleParams p{Rat(0), Rat(0), Rat(-2), Rat(0)};
    BiPoly P = appendix_P(SaddleFamily::N31, p, flat);

    SaddleParams other_c{Rat(0), Rat(0), Rat(-5), Rat(0)};
    CHECK(P == appendix_P(SaddleFamily::N31, other_c, flat));

    BiPoly vx = BiPoly::linear(flat.gamma1, flat.alpha1, Rat(0));
    BiPoly vy = BiPoly::linear(flat.gamma1, Rat(0), flat.beta1);
    Rat u2 = flat.c1 * flat.c1;
    BiPoly expected =
        (vx.pow(4) - vy.pow(4)) * frac(1, 4) + (vx.pow(2) - vy.pow(2)) * (frac(-3, 2) * u2);
    CHECK(P == expected);
}

TEST_CASE("appendix forms equal the generated differences coefficient for coefficient") {
    for (SaddleFamily f : all_families()) {
        CAPTURE(family_name(f));
        for (int draw = 0; draw < 3; ++draw) {
            SaddleParams p = valid_draw(f);
            AffineMap m = f == SaddleFamily::N1 ? kIdentity : random_affine();
            CHECK(crossing_difference(H_saddle(f, p, m)) == appendix_P(f, p, m));
        }
    }
}

TEST_CASE("invalid family parameters are rejected by the appendix forms") {
    CHECK_THROWS_AS(appendix_P(SaddleFamily::N1, {Rat(0), Rat(1), Rat(0), Rat(0)}, kIdentity),
                    std::invalid_argument);
    CHECK_THROWS_AS(appendix_P(SaddleFamily::N31, {Rat(1), Rat(0), Rat(-1), Rat(0)}, kIdentity),
                    std::invalid_argument);
}

TEST_CASE("toy pair solves to the unit point") {
    SolveResult r = solve_crossing(toy_pair(), 1e-9);
    REQUIRE(r.admissible.size() == 1);
    const CrossingSolution& s = r.admissible[0];
    CHECK(s.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.y == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.simple);
    CHECK(s.multiplicity == 1);
    CHECK(s.residual_PL <= 1e-10);
    CHECK(s.residual_Pi <= 1e-10);
    CHECK(s.jacobian_det == doctest::Approx(16.0).epsilon(1e-9));
    CHECK(r.boundary.empty());
}

TEST_CASE("common component raises the curve error") {
    CrossingPolys cp = toy_pair();
    cp.Pi = BiPoly::monomial(4, 0, Rat(1)) - BiPoly::monomial(0, 4, Rat(1));
    CHECK_THROWS_WITH_AS(solve_crossing(cp, 1e-9), "non-isolated solution curve",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(count_report(cp), "non-isolated solution curve", std::runtime_error);
}

TEST_CASE("tangential contact is flagged and kept") {
    CrossingPolys cp;
    cp.PL = BiPoly::monomial(2, 0, Rat(1)) - BiPoly::monomial(0, 1, Rat(1));
    cp.Pi = BiPoly::monomial(4, 0, Rat(1)) - BiPoly::monomial(0, 3, Rat(1)) +
            BiPoly::monomial(0, 1, Rat(1)) - BiPoly::constant(Rat(1));
    cp.provenance = Provenance::Explicit;
    SolveResult r = solve_crossing(cp, 1e-9);
    REQUIRE(r.admissible.size() == 1);
    const CrossingSolution& s = r.admissible[0];
    CHECK(s.x == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(s.y == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_FALSE(s.simple);
    CHECK(s.multiplicity == 4);
    CHECK(std::abs(s.jacobian_det) < 1e-6);
    CHECK(s.residual_PL <= 1e-10);
    CHECK(s.residual_Pi <= 1e-10);
}

TEST_CASE("axis intersections land in the boundary list") {
    CrossingPolys cp;
    cp.PL = BiPoly::monomial(2, 0, Rat(1)) - BiPoly::monomial(1, 0, Rat(2)) -
            BiPoly::monomial(0, 2, Rat(1)) - BiPoly::monomial(0, 1, Rat(3));
    cp.Pi = BiPoly::monomial(4, 0, Rat(1)) - BiPoly::monomial(2, 0, Rat(4)) -
            BiPoly::monomial(0, 4, Rat(1)) - BiPoly::monomial(0, 1, Rat(1));
    cp.provenance = Provenance::Explicit;
    SolveResult r = solve_crossing(cp, 1e-9);

    REQUIRE(r.boundary.size() == 1);
    CHECK(r.boundary[0].x == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.boundary[0].y == 0.0);
    CHECK(r.boundary[0].residual_PL <= 1e-10);
    CHECK(r.boundary[0].residual_Pi <= 1e-10);

    for (const CrossingSolution& s : r.admissible) {
        CHECK(s.x > 1e-9);
        CHECK(s.y > 1e-9);
        CHECK(s.residual_PL <= 1e-10);
        CHECK(s.residual_Pi <= 1e-10);
    }
}

TEST_CASE("count report states the bound and the observed degree") {
    CountReport rep = count_report(toy_pair());
    CHECK(rep.bezout_bound == 8);
    CHECK(rep.resultant_degree == 8);
    CHECK(rep.admissible_count == 1);
}

TEST_CASE("grid scan agrees with the solver") {
    SUBCASE("toy pair") {
        auto scan = testing::brute_force_scan(toy_pair(), {3.0, 1e-2, 1e-6});
        REQUIRE(scan.size() == 1);
        CHECK(scan[0].first == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(scan[0].second == doctest::Approx(1.0).epsilon(1e-8));
    }
    SUBCASE("random second family system") {
        auto sys = PiecewiseSystem::from_params(random_center(), SaddleFamily::N2,
                                                valid_draw(SaddleFamily::N2), random_affine());
        CrossingPolys cp = build_crossing_polys(sys);
        SolveResult r = solve_crossing(cp, 1e-9);
        auto scan = testing::brute_force_scan(cp, {50.0, 1e-2, 1e-6});

        for (const auto& [sx, sy] : scan) {
            bool matched = false;
            for (const CrossingSolution& s : r.admissible)
                if (std::hypot(s.x - sx, s.y - sy) <= 1e-6) matched = true;
            CHECK(matched);
        }
        for (const CrossingSolution& s : r.admissible) {
            if (s.x > 49.9 || s.y > 49.9) continue;
            bool matched = false;
            for (const auto& [sx, sy] : scan)
                if (std::hypot(s.x - sx, s.y - sy) <= 1e-6) matched = true;
            CHECK(matched);
        }
    }
}

TEST_CASE("random systems respect the count bound and strict positivity") {
    for (SaddleFamily f : all_families()) {
        CAPTURE(family_name(f));
        for (int draw = 0; draw < 2; ++draw) {
            auto sys = PiecewiseSystem::from_params(random_center(), f, valid_draw(f),
                                                    random_affine());
            CrossingPolys cp = build_crossing_polys(sys);
            CountReport rep = count_report(cp);
            CHECK(rep.bezout_bound == 8);
            CHECK(rep.resultant_degree <= 8);
            CHECK(rep.admissible_count <= 7);
            for (const CrossingSolution& s : solve_crossing(cp, 1e-9).admissible) {
                CHECK(s.x > 0);
                CHECK(s.y > 0);
            }
        }
    }
}
