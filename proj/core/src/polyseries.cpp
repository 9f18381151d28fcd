#include "opchar/polyseries.hpp"

#include <stdexcept>

namespace opchar {

namespace {
void check_same(const PolySeries1& a, const PolySeries1& b) {
    if (a.var() != b.var() || a.max_degree() != b.max_degree())
        throw std::invalid_argument("mixing series with different variable or truncation");
}

// f(g) with the result truncated at out_degree; g must be complete through
// the degrees its powers can reach below out_degree.
PolySeries1 compose_to(const PolySeries1& f, const PolySeries1& g, int out_degree) {
    if (!is_zero(g.coeff(0)))
        throw std::invalid_argument("compose: inner series must have zero constant term");
    PolySeries1 r(g.var(), out_degree);
    PolySeries1 gw(g.var(), out_degree);
    for (const auto& [k, c] : g.coeffs()) gw.set_coeff(k, c);
    PolySeries1 gp = ps_monomial(g.var(), 0, Rational(1), out_degree);
    int cur_pow = 0;
    for (const auto& [k, c] : f.coeffs()) {
        while (cur_pow < k && !(gp.is_zero() && cur_pow > 0)) {
            gp = gp * gw;
            ++cur_pow;
        }
        if (cur_pow != k) break;
        r = r + c * gp;
    }
    return r;
}
}  // namespace

void PolySeries1::set_coeff(int k, const Rational& c) {
    if (k < 0) throw std::invalid_argument("negative degree");
    if (k > max_degree_) return;
    if (is_zero(c))
        coeffs_.erase(k);
    else
        coeffs_[k] = c;
}

PolySeries1 PolySeries1::truncated(int degree) const {
    PolySeries1 r(var_, degree);
    for (const auto& [k, c] : coeffs_)
        if (k <= degree) r.coeffs_[k] = c;
    return r;
}

PolySeries1 PolySeries1::renamed(const std::string& var) const {
    PolySeries1 r(var, max_degree_);
    r.coeffs_ = coeffs_;
    return r;
}

PolySeries1 operator+(const PolySeries1& a, const PolySeries1& b) {
    check_same(a, b);
    PolySeries1 r = a;
    for (const auto& [k, c] : b.coeffs_) r.set_coeff(k, r.coeff(k) + c);
    return r;
}

PolySeries1 operator-(const PolySeries1& a, const PolySeries1& b) {
    check_same(a, b);
    PolySeries1 r = a;
    for (const auto& [k, c] : b.coeffs_) r.set_coeff(k, r.coeff(k) - c);
    return r;
}

PolySeries1 PolySeries1::operator-() const {
    PolySeries1 r(var_, max_degree_);
    for (const auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
    return r;
}

PolySeries1 operator*(const PolySeries1& a, const PolySeries1& b) {
    check_same(a, b);
    PolySeries1 r(a.var_, a.max_degree_);
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) {
            if (ka + kb > a.max_degree_) continue;
            r.set_coeff(ka + kb, r.coeff(ka + kb) + ca * cb);
        }
    return r;
}

PolySeries1 operator*(const Rational& c, const PolySeries1& a) {
    PolySeries1 r(a.var_, a.max_degree_);
    if (is_zero(c)) return r;
    for (const auto& [k, v] : a.coeffs_) r.coeffs_[k] = c * v;
    return r;
}

bool operator==(const PolySeries1& a, const PolySeries1& b) {
    return a.var_ == b.var_ && a.max_degree_ == b.max_degree_ && a.coeffs_ == b.coeffs_;
}

PolySeries1 ps_monomial(const std::string& var, int degree, const Rational& c, int max_degree) {
    PolySeries1 r(var, max_degree);
    r.set_coeff(degree, c);
    return r;
}

PolySeries1 ps_derivative(const PolySeries1& f) {
    PolySeries1 r(f.var(), f.max_degree());
    for (const auto& [k, c] : f.coeffs())
        if (k >= 1) r.set_coeff(k - 1, Rational(k) * c);
    return r;
}

PolySeries1 ps_compose(const PolySeries1& f, const PolySeries1& g) {
    return compose_to(f, g, std::min(f.max_degree(), g.max_degree()));
}

PolySeries1 ps_inverse(const PolySeries1& u) {
    if (!is_zero(u.coeff(0)) || is_zero(u.coeff(1)))
        throw std::invalid_argument("ps_inverse: series must be c*x + ... with c != 0");
    int W = u.max_degree();
    Rational c = u.coeff(1);
    PolySeries1 rest = u;
    rest.set_coeff(1, Rational(0));
    PolySeries1 x = ps_monomial(u.var(), 1, Rational(1), W);
    PolySeries1 v = (1 / c) * x;
    // v = (x - rest(v)) / c; each pass fixes one more degree.
    for (int pass = 0; pass < W; ++pass) {
        PolySeries1 next = (1 / c) * (x - compose_to(rest, v, W));
        if (next == v) break;
        v = next;
    }
    return v;
}

PolySeries1 ps_legendre(const PolySeries1& f) {
    if (!is_zero(f.coeff(0)) || !is_zero(f.coeff(1)) || is_zero(f.coeff(2)))
        throw std::invalid_argument("ps_legendre: series must be a2*x^2/2 + ... with a2 != 0");
    int W = f.max_degree();
    PolySeries1 fp = ps_derivative(f).truncated(W - 1);
    PolySeries1 lhs = ps_monomial(f.var(), 1, Rational(1), W) * fp.renamed(f.var()).truncated(W) - f;
    PolySeries1 inv = ps_inverse(fp);
    // Outer terms have degree >= 2, so the inverse through degree W-1
    // determines the composite through degree W.
    return compose_to(lhs, inv, W);
}

}  // namespace opchar
