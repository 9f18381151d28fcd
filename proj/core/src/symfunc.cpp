#include "opchar/symfunc.hpp"

#include <stdexcept>

namespace opchar {

namespace {
void check_same_weight(const SymFunc& a, const SymFunc& b) {
    if (a.max_weight() != b.max_weight())
        throw std::invalid_argument(
            "mixing symmetric functions with different truncations; coerce explicitly");
}
}  // namespace

SymFunc::SymFunc(int max_weight) : max_weight_(max_weight) {
    if (max_weight < 0) throw std::invalid_argument("max_weight must be non-negative");
}

SymFunc SymFunc::one(int max_weight) {
    SymFunc f(max_weight);
    f.add_term({}, Rational(1));
    return f;
}

SymFunc SymFunc::power_sum(int n, int max_weight) {
    if (n <= 0) throw std::invalid_argument("power sum index must be positive");
    SymFunc f(max_weight);
    f.add_term({n}, Rational(1));
    return f;
}

SymFunc SymFunc::monomial(const Partition& p, const Rational& c, int max_weight) {
    check_partition(p);
    SymFunc f(max_weight);
    f.add_term(p, c);
    return f;
}

SymFunc SymFunc::complete(int n, int max_weight) {
    if (n < 0) throw std::invalid_argument("complete: n must be >= 0");
    SymFunc f(max_weight);
    if (n == 0) return one(max_weight);
    // h_n = sum over partitions of n of p_lambda / z_lambda
    for (const auto& lam : partitions_of(n)) f.add_term(lam, rat(Integer(1), z_factor(lam)));
    return f;
}

SymFunc SymFunc::elementary(int n, int max_weight) {
    if (n < 0) throw std::invalid_argument("elementary: n must be >= 0");
    SymFunc f(max_weight);
    if (n == 0) return one(max_weight);
    // e_n = sum over partitions of n of (-1)^{n - l(lambda)} p_lambda / z_lambda
    for (const auto& lam : partitions_of(n)) {
        Rational c = rat(Integer(1), z_factor(lam));
        if ((n - length(lam)) % 2 != 0) c = -c;
        f.add_term(lam, c);
    }
    return f;
}

Rational SymFunc::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SymFunc::min_term_weight() const {
    if (terms_.empty()) return max_weight_ + 1;
    return weight(terms_.begin()->first);
}

void SymFunc::add_term(const Partition& p, const Rational& c) {
    if (weight(p) > max_weight_) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (!is_zero(c)) terms_.emplace(p, c);
    } else {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

SymFunc SymFunc::truncated(int max_weight) const {
    SymFunc r(max_weight);
    for (const auto& [p, c] : terms_)
        if (weight(p) <= max_weight) r.terms_.emplace(p, c);
    return r;
}

SymFunc SymFunc::weight_part(int w) const {
    SymFunc r(max_weight_);
    for (const auto& [p, c] : terms_)
        if (weight(p) == w) r.terms_.emplace(p, c);
    return r;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
    check_same_weight(a, b);
    SymFunc r = a;
    for (const auto& [p, c] : b.terms_) r.add_term(p, c);
    return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
    check_same_weight(a, b);
    SymFunc r = a;
    for (const auto& [p, c] : b.terms_) r.add_term(p, -c);
    return r;
}

SymFunc SymFunc::operator-() const {
    SymFunc r(max_weight_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    check_same_weight(a, b);
    SymFunc r(a.max_weight_);
    for (const auto& [pa, ca] : a.terms_) {
        int wa = weight(pa);
        for (const auto& [pb, cb] : b.terms_) {
            if (wa + weight(pb) > a.max_weight_) continue;
            r.add_term(merge_parts(pa, pb), ca * cb);
        }
    }
    return r;
}

SymFunc operator*(const Rational& c, const SymFunc& a) {
    SymFunc r(a.max_weight_);
    if (is_zero(c)) return r;
    for (const auto& [p, v] : a.terms_) r.terms_.emplace(p, c * v);
    return r;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.max_weight_ == b.max_weight_ && a.terms_ == b.terms_;
}

namespace {
// p_lambda o g as a product of the part-scaled copies of g.
SymFunc pleth_monomial(const Partition& lam, const SymFunc& g, int out_weight) {
    SymFunc acc = SymFunc::one(out_weight);
    for (int part : lam) {
        SymFunc scaled(out_weight);
        for (const auto& [p, c] : g.terms()) {
            Partition q = scale_parts(p, part);
            if (weight(q) <= out_weight) scaled.add_term(q, c);
        }
        acc = acc * scaled;
        if (acc.is_zero()) break;
    }
    return acc;
}
}  // namespace

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    if (!is_zero(g.coeff({})))
        throw std::invalid_argument("plethysm: inner function must have zero constant term");
    int W = std::min(f.max_weight(), g.max_weight());
    SymFunc r(W);
    for (const auto& [lam, c] : f.terms()) {
        if (lam.empty()) {
            r.add_term({}, c);
            continue;
        }
        SymFunc m = pleth_monomial(lam, g, W);
        for (const auto& [p, v] : m.terms()) r.add_term(p, c * v);
    }
    return r;
}

SymFunc plethysm_to(const SymFunc& f, const SymFunc& g, int out_weight) {
    if (!is_zero(g.coeff({})))
        throw std::invalid_argument("plethysm_to: inner function must have zero constant term");
    if (f.min_term_weight() < 2)
        throw std::invalid_argument("plethysm_to: outer terms must have weight >= 2");
    if (g.max_weight() < out_weight - 1)
        throw std::invalid_argument("plethysm_to: inner truncation too small for requested output");
    SymFunc r(out_weight);
    for (const auto& [lam, c] : f.terms()) {
        SymFunc m = pleth_monomial(lam, g, out_weight);
        for (const auto& [p, v] : m.terms()) r.add_term(p, c * v);
    }
    return r;
}

SymFunc pderiv(const SymFunc& f, int n) {
    if (n <= 0) throw std::invalid_argument("pderiv: index must be positive");
    SymFunc r(f.max_weight());
    for (const auto& [p, c] : f.terms()) {
        auto mults = multiplicities(p);
        auto it = mults.find(n);
        if (it == mults.end()) continue;
        r.add_term(remove_part(p, n), Rational(it->second) * c);
    }
    return r;
}

Rational inner_product(const SymFunc& f, const SymFunc& g) {
    Rational r(0);
    const auto& smaller = f.terms().size() <= g.terms().size() ? f : g;
    const auto& larger = f.terms().size() <= g.terms().size() ? g : f;
    for (const auto& [p, c] : smaller.terms()) {
        Rational d = larger.coeff(p);
        if (!is_zero(d)) r += c * d * Rational(z_factor(p));
    }
    return r;
}

SymFunc adjoint_apply(const SymFunc& f, const SymFunc& g) {
    SymFunc r(g.max_weight());
    for (const auto& [lam, c] : f.terms()) {
        SymFunc cur = g;
        for (int part : lam) {
            cur = Rational(part) * pderiv(cur, part);
            if (cur.is_zero()) break;
        }
        if (cur.is_zero()) continue;
        for (const auto& [p, v] : cur.terms()) r.add_term(p, c * v);
    }
    return r;
}

SymFunc involution(const SymFunc& f, Involution which) {
    SymFunc r(f.max_weight());
    for (const auto& [p, c] : f.terms()) {
        int flips = which == Involution::omega_tilde ? length(p) : weight(p) - length(p);
        r.add_term(p, flips % 2 == 0 ? c : -c);
    }
    return r;
}

PolySeries1 rank(const SymFunc& f) {
    PolySeries1 r("x", f.max_weight());
    for (const auto& [p, c] : f.terms()) {
        // only partitions of shape (1^k) survive p_1 -> x, p_n -> 0
        if (!p.empty() && p.front() > 1) continue;
        r.set_coeff(length(p), r.coeff(length(p)) + c);
    }
    return r;
}

}  // namespace opchar
