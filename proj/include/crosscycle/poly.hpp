#pragma once

#include <utility>
#include <vector>

#include "crosscycle/rational.hpp"

namespace crosscycle {

// Dense univariate polynomial over the rationals, constant term first.
// Invariant: coefficient list is empty (zero polynomial) or ends in a nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);

    static UniPoly constant(const Rat& c);
    static UniPoly monomial(int k, const Rat& c);

    // -1 for the zero polynomial, else index of the last nonzero coefficient.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // Coefficient of t^k; zero outside the stored range.
    Rat coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derivative() const;
    Rat eval(const Rat& t) const;
    double eval_d(double t) const;
    std::vector<double> double_coeffs() const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Exact division helpers. divrem requires a nonzero divisor.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd_poly(const UniPoly& a, const UniPoly& b);
// Largest square-free divisor u / gcd(u, u'), made monic.
UniPoly squarefree_part(const UniPoly& u);
// Yun decomposition: result[i] is the (monic, square-free) product of the
// roots of multiplicity i+1. Factors of degree zero are left as constants.
std::vector<UniPoly> yun_factors(const UniPoly& u);
// Synthetic division by (t - r); r must be an exact root.
UniPoly deflate_root(const UniPoly& u, const Rat& r);
// 1 + max |a_i / a_deg|; every real root lies within this radius.
Rat cauchy_bound(const UniPoly& u);

// Dense bivariate polynomial over the rationals; coeff(i, j) multiplies
// x^i y^j. Stored rows are x-degrees.
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly constant(const Rat& c);
    // c0 + cx*x + cy*y
    static BiPoly linear(const Rat& c0, const Rat& cx, const Rat& cy);
    static BiPoly monomial(int i, int j, const Rat& c);

    int degx() const;
    int degy() const;
    bool is_zero() const;
    Rat coeff(int i, int j) const;
    // Grows storage as needed; caller must not leave a stale leading zero
    // (mutation re-trims lazily through trim()).
    void set_coeff(int i, int j, const Rat& v);

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Rat& s) const;
    BiPoly operator-() const;
    bool operator==(const BiPoly& o) const { return c_ == o.c_; }

    BiPoly pow(int k) const;
    BiPoly dx() const;
    BiPoly dy() const;
    Rat eval(const Rat& x, const Rat& y) const;
    double eval_d(double x, double y) const;

    // Restrictions to the axes: p(x, 0) as a polynomial in x, p(0, y) in y.
    UniPoly restrict_y0() const;
    UniPoly restrict_x0() const;
    // Coefficient of x^k as a polynomial in y.
    UniPoly coeff_in_x(int k) const;
    // Substitute x <- u(x,y), y <- v(x,y).
    BiPoly substitute(const BiPoly& u, const BiPoly& v) const;

private:
    void trim();
    // c_[i][j] multiplies x^i y^j; outer vector may be empty (zero poly).
    std::vector<std::vector<Rat>> c_;
};

// Formal partial derivative; var is 0 for x, 1 for y.
BiPoly partial(const BiPoly& p, int var);

// Determinant of the Sylvester matrix of p and q viewed as polynomials in x
// with coefficients in Q[y]. Throws std::invalid_argument("nothing to
// eliminate") when both inputs have x-degree <= 0.
UniPoly resultant_x(const BiPoly& p, const BiPoly& q);

// Floating-point mirror for the numeric phases (refinement, integration).
template <typename T>
struct DenseBi {
    // c[i][j] multiplies x^i y^j.
    std::vector<std::vector<T>> c;

    T eval(T x, T y) const {
        T acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            T row = 0;
            for (std::size_t j = c[i].size(); j-- > 0;) row = row * y + c[i][j];
            acc = acc * x + row;
        }
        return acc;
    }
};

template <typename T>
DenseBi<T> to_dense(const BiPoly& p) {
    DenseBi<T> d;
    int nx = p.degx(), ny = p.degy();
    if (nx < 0) return d;
    d.c.assign(nx + 1, std::vector<T>(ny + 1, T(0)));
    for (int i = 0; i <= nx; ++i)
        for (int j = 0; j <= ny; ++j) d.c[i][j] = static_cast<T>(to_double(p.coeff(i, j)));
    return d;
}

}  // namespace crosscycle
