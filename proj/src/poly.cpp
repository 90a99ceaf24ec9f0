#include "crosscycle/poly.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace crosscycle {

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(int k, const Rat& c) {
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return UniPoly(std::move(v));
}

Rat UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[k];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x = -x;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x *= s;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(v));
}

Rat UniPoly::eval(const Rat& t) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

double UniPoly::eval_d(double t) const {
    double acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + to_double(c_[i]);
    return acc;
}

std::vector<double> UniPoly::double_coeffs() const {
    std::vector<double> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = to_double(c_[i]);
    return v;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rat> rem(a.coeffs());
    int db = b.degree();
    Rat lead = b.coeff(db);
    std::vector<Rat> quot(a.degree() - db + 1, Rat(0));
    for (int k = a.degree(); k >= db; --k) {
        Rat q = rem[k] / lead;
        if (q == 0) continue;
        quot[k - db] = q;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeff(j);
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

namespace {

// Divide by the (positive) content so Euclidean chains stay small; keeps sign.
UniPoly primitive(const UniPoly& u) {
    if (u.is_zero()) return u;
    mpz_class num_gcd(0), den_lcm(1);
    for (const Rat& c : u.coeffs()) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    return u * (Rat(1) / content);
}

UniPoly monic(const UniPoly& u) {
    if (u.is_zero()) return u;
    return u * (Rat(1) / u.coeff(u.degree()));
}

}  // namespace

UniPoly gcd_poly(const UniPoly& a, const UniPoly& b) {
    UniPoly x = primitive(a), y = primitive(b);
    while (!y.is_zero()) {
        UniPoly r = divrem(x, y).second;
        x = y;
        y = primitive(r);
    }
    return monic(x);
}

UniPoly squarefree_part(const UniPoly& u) {
    if (u.is_zero()) return u;
    if (u.degree() == 0) return UniPoly::constant(Rat(1));
    UniPoly g = gcd_poly(u, u.derivative());
    if (g.degree() == 0) return monic(u);
    return monic(divrem(u, g).first);
}

std::vector<UniPoly> yun_factors(const UniPoly& u) {
    if (u.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
    std::vector<UniPoly> out;
    if (u.degree() == 0) return out;
    UniPoly f = monic(u);
    UniPoly g = gcd_poly(f, f.derivative());
    if (g.degree() == 0) {
        out.push_back(f);
        return out;
    }
    UniPoly w = divrem(f, g).first;           // product of distinct roots
    UniPoly y = divrem(f.derivative(), g).first;
    UniPoly z = y - w.derivative();
    while (w.degree() > 0) {
        UniPoly fac = gcd_poly(w, z);
        out.push_back(monic(fac));
        w = divrem(w, fac).first;
        y = divrem(z, fac).first;
        z = y - w.derivative();
    }
    return out;
}

UniPoly deflate_root(const UniPoly& u, const Rat& r) {
    int n = u.degree();
    if (n < 1) throw std::invalid_argument("cannot deflate a constant");
    std::vector<Rat> q(n);
    Rat carry = u.coeff(n);
    for (int k = n - 1; k >= 0; --k) {
        q[k] = carry;
        carry = u.coeff(k) + r * carry;
    }
    if (carry != 0) throw std::invalid_argument("deflate_root: not an exact root");
    return UniPoly(std::move(q));
}

Rat cauchy_bound(const UniPoly& u) {
    int d = u.degree();
    if (d <= 0) return Rat(1);
    Rat lead = abs(u.coeff(d)), m(0);
    for (int i = 0; i < d; ++i) {
        Rat ratio = abs(u.coeff(i)) / lead;
        if (ratio > m) m = ratio;
    }
    return Rat(1) + m;
}

// ---------------------------------------------------------------------------
// BiPoly

void BiPoly::trim() {
    int maxi = -1, maxj = -1;
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < c_[i].size(); ++j)
            if (c_[i][j] != 0) {
                maxi = std::max(maxi, static_cast<int>(i));
                maxj = std::max(maxj, static_cast<int>(j));
            }
    c_.resize(maxi + 1);
    for (auto& row : c_) row.resize(maxj + 1, Rat(0));
}

BiPoly BiPoly::constant(const Rat& c) {
    BiPoly p;
    p.set_coeff(0, 0, c);
    return p;
}

BiPoly BiPoly::linear(const Rat& c0, const Rat& cx, const Rat& cy) {
    BiPoly p;
    p.set_coeff(0, 0, c0);
    p.set_coeff(1, 0, cx);
    p.set_coeff(0, 1, cy);
    return p;
}

BiPoly BiPoly::monomial(int i, int j, const Rat& c) {
    BiPoly p;
    p.set_coeff(i, j, c);
    return p;
}

int BiPoly::degx() const { return static_cast<int>(c_.size()) - 1; }

int BiPoly::degy() const {
    if (c_.empty()) return -1;
    return static_cast<int>(c_[0].size()) - 1;
}

bool BiPoly::is_zero() const { return c_.empty(); }

Rat BiPoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    if (j >= static_cast<int>(c_[i].size())) return Rat(0);
    return c_[i][j];
}

void BiPoly::set_coeff(int i, int j, const Rat& v) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative monomial exponent");
    std::size_t need_rows = static_cast<std::size_t>(i) + 1;
    std::size_t need_cols = static_cast<std::size_t>(j) + 1;
    std::size_t cols = c_.empty() ? 0 : c_[0].size();
    cols = std::max(cols, need_cols);
    if (c_.size() < need_rows) c_.resize(need_rows);
    for (auto& row : c_) row.resize(cols, Rat(0));
    c_[i][j] = v;
    trim();
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r;
    int nx = std::max(degx(), o.degx()), ny = std::max(degy(), o.degy());
    if (nx < 0) return r;
    r.c_.assign(nx + 1, std::vector<Rat>(ny + 1, Rat(0)));
    for (int i = 0; i <= nx; ++i)
        for (int j = 0; j <= ny; ++j) r.c_[i][j] = coeff(i, j) + o.coeff(i, j);
    r.trim();
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& row : r.c_)
        for (auto& x : row) x = -x;
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    if (is_zero() || o.is_zero()) return r;
    int nx = degx() + o.degx(), ny = degy() + o.degy();
    r.c_.assign(nx + 1, std::vector<Rat>(ny + 1, Rat(0)));
    for (int i = 0; i <= degx(); ++i)
        for (int j = 0; j <= degy(); ++j) {
            if (c_[i][j] == 0) continue;
            for (int k = 0; k <= o.degx(); ++k)
                for (int l = 0; l <= o.degy(); ++l)
                    r.c_[i + k][j + l] += c_[i][j] * o.c_[k][l];
        }
    r.trim();
    return r;
}

BiPoly BiPoly::operator*(const Rat& s) const {
    BiPoly r = *this;
    for (auto& row : r.c_)
        for (auto& x : row) x *= s;
    r.trim();
    return r;
}

BiPoly BiPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    BiPoly r = BiPoly::constant(Rat(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

BiPoly BiPoly::dx() const {
    BiPoly r;
    if (degx() < 1) return r;
    r.c_.assign(degx(), std::vector<Rat>(degy() + 1, Rat(0)));
    for (int i = 1; i <= degx(); ++i)
        for (int j = 0; j <= degy(); ++j) r.c_[i - 1][j] = c_[i][j] * Rat(i);
    r.trim();
    return r;
}

BiPoly BiPoly::dy() const {
    BiPoly r;
    if (degy() < 1) return r;
    r.c_.assign(degx() + 1, std::vector<Rat>(degy(), Rat(0)));
    for (int i = 0; i <= degx(); ++i)
        for (int j = 1; j <= degy(); ++j) r.c_[i][j - 1] = c_[i][j] * Rat(j);
    r.trim();
    return r;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        Rat row(0);
        for (std::size_t j = c_[i].size(); j-- > 0;) row = row * y + c_[i][j];
        acc = acc * x + row;
    }
    return acc;
}

double BiPoly::eval_d(double x, double y) const {
    double acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        double row = 0;
        for (std::size_t j = c_[i].size(); j-- > 0;) row = row * y + to_double(c_[i][j]);
        acc = acc * x + row;
    }
    return acc;
}

UniPoly BiPoly::restrict_y0() const {
    std::vector<Rat> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i].empty() ? Rat(0) : c_[i][0];
    return UniPoly(std::move(v));
}

UniPoly BiPoly::restrict_x0() const {
    if (c_.empty()) return UniPoly();
    return UniPoly(c_[0]);
}

UniPoly BiPoly::coeff_in_x(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return UniPoly();
    return UniPoly(c_[k]);
}

BiPoly BiPoly::substitute(const BiPoly& u, const BiPoly& v) const {
    std::vector<BiPoly> upow{BiPoly::constant(Rat(1))}, vpow{BiPoly::constant(Rat(1))};
    for (int i = 1; i <= degx(); ++i) upow.push_back(upow.back() * u);
    for (int j = 1; j <= degy(); ++j) vpow.push_back(vpow.back() * v);
    BiPoly r;
    for (int i = 0; i <= degx(); ++i)
        for (int j = 0; j <= degy(); ++j) {
            Rat c = coeff(i, j);
            if (c != 0) r = r + upow[i] * vpow[j] * c;
        }
    return r;
}

BiPoly partial(const BiPoly& p, int var) {
    if (var == 0) return p.dx();
    if (var == 1) return p.dy();
    throw std::invalid_argument("partial: var must be 0 (x) or 1 (y)");
}

// ---------------------------------------------------------------------------
// Sylvester resultant, eliminating x

UniPoly resultant_x(const BiPoly& p, const BiPoly& q) {
    int m = p.degx(), n = q.degx();
    if (m <= 0 && n <= 0) throw std::invalid_argument("nothing to eliminate");
    if (p.is_zero() || q.is_zero()) return UniPoly();

    std::vector<UniPoly> pc(m + 1), qc(n + 1);
    for (int k = 0; k <= m; ++k) pc[k] = p.coeff_in_x(k);
    for (int k = 0; k <= n; ++k) qc[k] = q.coeff_in_x(k);

    // One side constant in x: the determinant collapses to a power.
    if (m == 0) {
        UniPoly r = UniPoly::constant(Rat(1));
        for (int i = 0; i < n; ++i) r = r * pc[0];
        return r;
    }
    if (n == 0) {
        UniPoly r = UniPoly::constant(Rat(1));
        for (int i = 0; i < m; ++i) r = r * qc[0];
        return r;
    }

    int N = m + n;
    if (N > 16) throw std::runtime_error("resultant_x: matrix too large");
    std::vector<std::vector<UniPoly>> M(N, std::vector<UniPoly>(N));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[r][r + k] = pc[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[n + r][r + k] = qc[n - k];

    // Laplace expansion as a DP over used-column subsets: f[mask] is the
    // determinant of the top popcount(mask) rows restricted to columns mask.
    std::vector<UniPoly> f(1u << N);
    f[0] = UniPoly::constant(Rat(1));
    for (unsigned mask = 1; mask < (1u << N); ++mask) {
        int r = std::popcount(mask) - 1;
        UniPoly acc;
        int idx = 0;
        for (int j = 0; j < N; ++j) {
            if (!(mask & (1u << j))) continue;
            if (!M[r][j].is_zero() && !f[mask ^ (1u << j)].is_zero()) {
                UniPoly term = M[r][j] * f[mask ^ (1u << j)];
                acc = ((r + idx) % 2 == 0) ? acc + term : acc - term;
            }
            ++idx;
        }
        f[mask] = acc;
    }
    return f[(1u << N) - 1];
}

}  // namespace crosscycle
