#include "crosscycle/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crosscycle {

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& g) {
    std::vector<UniPoly> chain{g, g.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly r = divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        // Scale by the positive content only; the chain is used through signs.
        mpz_class num_gcd(0), den_lcm(1);
        for (const Rat& c : r.coeffs()) {
            if (c == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rat content(num_gcd, den_lcm);
        content.canonicalize();
        chain.push_back(-(r * (Rat(1) / content)));
    }
    while (!chain.empty() && chain.back().is_zero()) chain.pop_back();
    return chain;
}

int variations(const std::vector<UniPoly>& chain, const Rat& t) {
    int count = 0, prev = 0;
    for (const UniPoly& s : chain) {
        int sg = sgn(s.eval(t));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

}  // namespace

std::vector<RootBracket> isolate_real_roots(const UniPoly& u, const Rat& lo, const Rat& hi) {
    if (u.is_zero())
        throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("empty isolation interval");

    UniPoly g = squarefree_part(u);
    if (g.degree() <= 0) return {};
    std::vector<UniPoly> factors = yun_factors(u);
    std::vector<UniPoly> chain = sturm_chain(g);

    // With zeros skipped in the variation count, V is right-continuous and
    // drops by one exactly at each root of the square-free part, so
    // V(a) - V(b) counts roots in the half-open interval (a, b] even when an
    // endpoint is itself a root. The requested half-open semantics come for
    // free and no endpoint preconditioning is needed during subdivision.
    auto count = [&](const Rat& a, const Rat& b) {
        return variations(chain, a) - variations(chain, b);
    };

    // First interior dyadic point that is not a root of u; such a point exists
    // among the probes because u has fewer roots than the probe ladder.
    auto clean_point = [&](const Rat& a, const Rat& b) {
        for (int j = 1; j <= 6; ++j)
            for (long k = 1; k < (1L << j); k += 2) {
                Rat t = a + (b - a) * frac(k, 1L << j);
                if (u.eval(t) != 0) return t;
            }
        throw std::runtime_error("root isolation: probe ladder exhausted");
    };

    struct Interval {
        Rat lo, hi;
    };
    std::vector<Interval> emitted;
    std::vector<Interval> work{{lo, hi}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int n = count(a, b);
        if (n == 0) continue;
        if (n > 1) {
            Rat mid = (a + b) / 2;
            work.push_back({a, mid});
            work.push_back({mid, b});
            continue;
        }
        // Exactly one root in (a, b].
        if (g.eval(b) == 0) {
            // Root exactly at the dyadic endpoint; straddle it tightly.
            Rat delta = (b - a) / 2;
            while (!(u.eval(b - delta) != 0 && u.eval(b + delta) != 0 &&
                     count(b - delta, b + delta) == 1))
                delta /= 2;
            emitted.push_back({b - delta, b + delta});
            continue;
        }
        // Root strictly inside; move any root-of-u endpoints off the roots so
        // the bracket carries well-defined signs.
        while (u.eval(a) == 0 || u.eval(b) == 0) {
            Rat t = clean_point(a, b);
            if (count(a, t) == 1)
                b = t;
            else
                a = t;
        }
        emitted.push_back({a, b});
    }

    std::sort(emitted.begin(), emitted.end(),
              [](const Interval& p, const Interval& q) { return p.lo < q.lo; });

    // Straddling brackets may poke into a neighbour. The overlap region is
    // root-free (each bracket holds exactly one root), so any interior point
    // separates them.
    for (std::size_t i = 0; i + 1 < emitted.size(); ++i) {
        if (emitted[i].hi > emitted[i + 1].lo) {
            Rat s = (emitted[i + 1].lo + emitted[i].hi) / 2;
            if (u.eval(s) == 0)
                throw std::runtime_error("root isolation: overlap separator hit a root");
            emitted[i].hi = s;
            emitted[i + 1].lo = s;
        }
    }

    std::vector<RootBracket> out;
    for (const Interval& w : emitted) {
        RootBracket rb;
        rb.lo = w.lo;
        rb.hi = w.hi;
        rb.sign_lo = sgn(u.eval(w.lo));
        rb.sign_hi = sgn(u.eval(w.hi));
        rb.multiplicity = 1;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].degree() <= 0) continue;
            if (sgn(factors[i].eval(w.lo)) * sgn(factors[i].eval(w.hi)) < 0) {
                rb.multiplicity = static_cast<int>(i) + 1;
                break;
            }
        }
        out.push_back(std::move(rb));
    }
    return out;
}

double refine_root(const UniPoly& u, const RootBracket& b, double tol) {
    if (!(b.lo < b.hi)) throw std::invalid_argument("non-isolating bracket");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    UniPoly g = squarefree_part(u);
    Rat a = b.lo, c = b.hi;
    int sa = sgn(g.eval(a)), sc = sgn(g.eval(c));
    if (sa == 0 || sc == 0 || sa == sc)
        throw std::invalid_argument("non-isolating bracket");

    Rat width_target = rat_from_double(std::max(tol, 1e-15));
    while (c - a > width_target) {
        Rat mid = (a + c) / 2;
        int sm = sgn(g.eval(mid));
        if (sm == 0) return to_double(mid);
        if (sm == sa)
            a = mid;
        else
            c = mid;
    }

    // Newton polish in double; the exact bracket guards against escapes.
    double x = to_double((a + c) / 2);
    double lo_d = to_double(a), hi_d = to_double(c);
    double span = hi_d - lo_d;
    UniPoly gd = g.derivative();
    for (int it = 0; it < 8; ++it) {
        double fx = g.eval_d(x), dfx = gd.eval_d(x);
        if (fx == 0.0 || dfx == 0.0) break;
        double next = x - fx / dfx;
        if (!(next >= lo_d - span && next <= hi_d + span)) break;
        if (next == x) break;
        x = next;
    }
    return x;
}

}  // namespace crosscycle
