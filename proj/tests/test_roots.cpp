#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>

#include "crosscycle/roots.hpp"
#include "doctest.h"

using namespace crosscycle;

namespace {

UniPoly from_roots(const std::vector<Rat>& roots) {
    UniPoly t = UniPoly::monomial(1, Rat(1));
    UniPoly u = UniPoly::constant(Rat(1));
    for (const Rat& r : roots) u = u * (t - UniPoly::constant(r));
    return u;
}

}  // namespace

TEST_CASE("isolating sqrt(2) in (0, 10)") {
    UniPoly u = UniPoly::monomial(2, Rat(1)) - UniPoly::constant(Rat(2));
    auto brackets = isolate_real_roots(u, Rat(0), Rat(10));
    REQUIRE(brackets.size() == 1);
    CHECK(brackets[0].multiplicity == 1);
    CHECK(brackets[0].sign_lo * brackets[0].sign_hi < 0);
    double r = refine_root(u, brackets[0], 1e-14);
    CHECK(r == doctest::Approx(1.4142135623730951).epsilon(1e-15));
}

TEST_CASE("double root is bracketed once and flagged multiplicity 2") {
    UniPoly t = UniPoly::monomial(1, Rat(1));
    UniPoly u = (t - UniPoly::constant(Rat(1))) * (t - UniPoly::constant(Rat(1)));
    auto brackets = isolate_real_roots(u, Rat(0), Rat(2));
    REQUIRE(brackets.size() == 1);
    CHECK(brackets[0].multiplicity == 2);
    // u does not change sign across an even-multiplicity root.
    CHECK(brackets[0].sign_lo == brackets[0].sign_hi);
    CHECK(refine_root(u, brackets[0], 1e-14) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("triple root at zero refines to zero after square-free reduction") {
    UniPoly u = UniPoly::monomial(3, Rat(1));
    auto brackets = isolate_real_roots(u, Rat(-1), Rat(1));
    REQUIRE(brackets.size() == 1);
    CHECK(brackets[0].multiplicity == 3);
    CHECK(std::abs(refine_root(u, brackets[0], 1e-14)) <= 1e-12);
}

TEST_CASE("half-open interval semantics: root at lo excluded, at hi included") {
    UniPoly u = from_roots({Rat(1), Rat(2)});
    auto left_excluded = isolate_real_roots(u, Rat(1), Rat(2));
    REQUIRE(left_excluded.size() == 1);
    CHECK(to_double(left_excluded[0].lo) >= 1.0);
    CHECK(refine_root(u, left_excluded[0], 1e-14) == doctest::Approx(2.0));

    auto right_included = isolate_real_roots(u, Rat(0), Rat(1));
    REQUIRE(right_included.size() == 1);
    CHECK(refine_root(u, right_included[0], 1e-14) == doctest::Approx(1.0));
}

TEST_CASE("exact dyadic root at a probe point is still isolated") {
    // 1/2 is the first bisection midpoint of (0, 1).
    UniPoly u = from_roots({Rat(1, 2), Rat(1, 3), Rat(3, 4)});
    auto brackets = isolate_real_roots(u, Rat(0), Rat(1));
    REQUIRE(brackets.size() == 3);
    std::vector<double> roots;
    for (const auto& b : brackets) roots.push_back(refine_root(u, b, 1e-14));
    std::sort(roots.begin(), roots.end());
    CHECK(roots[0] == doctest::Approx(1.0 / 3).epsilon(1e-13));
    CHECK(roots[1] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(roots[2] == doctest::Approx(0.75).epsilon(1e-13));
}

TEST_CASE("brackets are disjoint and complete on random factored polynomials") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> mult(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rat> distinct;
        for (int k = 0; k < 4; ++k) {
            Rat r = frac(num(rng), 16);
            if (std::find(distinct.begin(), distinct.end(), r) == distinct.end())
                distinct.push_back(r);
        }
        std::vector<Rat> with_mult;
        std::vector<int> mults;
        for (const Rat& r : distinct) {
            int m = mult(rng);
            mults.push_back(m);
            for (int i = 0; i < m; ++i) with_mult.push_back(r);
        }
        UniPoly u = from_roots(with_mult);
        Rat lo(-4), hi(4);
        auto brackets = isolate_real_roots(u, lo, hi);

        std::size_t expected = 0;
        for (const Rat& r : distinct)
            if (lo < r && r <= hi) ++expected;
        REQUIRE(brackets.size() == expected);

        for (std::size_t i = 0; i + 1 < brackets.size(); ++i)
            CHECK(brackets[i].hi <= brackets[i + 1].lo);

        for (const auto& b : brackets) {
            double rd = refine_root(u, b, 1e-13);
            bool matched = false;
            for (std::size_t i = 0; i < distinct.size(); ++i) {
                if (std::abs(rd - to_double(distinct[i])) <= 1e-10) {
                    matched = true;
                    CHECK(b.multiplicity == mults[i]);
                }
            }
            CHECK(matched);
        }
    }
}

TEST_CASE("close roots at spacing 2^-20 are separated") {
    Rat eps(1, 1 << 20);
    UniPoly u = from_roots({Rat(1), Rat(1), Rat(1) + eps});
    auto brackets = isolate_real_roots(u, Rat(0), Rat(2));
    REQUIRE(brackets.size() == 2);
    CHECK(brackets[0].multiplicity == 2);
    CHECK(brackets[1].multiplicity == 1);
    double r0 = refine_root(u, brackets[0], 1e-14);
    double r1 = refine_root(u, brackets[1], 1e-14);
    CHECK(r0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r1 == doctest::Approx(1.0 + to_double(eps)).epsilon(1e-12));
}

TEST_CASE("error paths: zero polynomial, empty interval, bad bracket") {
    CHECK_THROWS_AS(isolate_real_roots(UniPoly(), Rat(0), Rat(1)), std::invalid_argument);
    UniPoly u = UniPoly::monomial(2, Rat(1)) - UniPoly::constant(Rat(2));
    CHECK_THROWS_AS(isolate_real_roots(u, Rat(1), Rat(1)), std::invalid_argument);
    RootBracket bad;
    bad.lo = Rat(3);
    bad.hi = Rat(4);
    bad.sign_lo = 1;
    bad.sign_hi = 1;
    CHECK_THROWS_WITH_AS(refine_root(u, bad, 1e-12), "non-isolating bracket",
                         std::invalid_argument);
}

TEST_CASE("constant and root-free inputs yield no brackets") {
    CHECK(isolate_real_roots(UniPoly::constant(Rat(5)), Rat(0), Rat(1)).empty());
    UniPoly u = UniPoly::monomial(2, Rat(1)) + UniPoly::constant(Rat(1));
    CHECK(isolate_real_roots(u, Rat(-10), Rat(10)).empty());
}
