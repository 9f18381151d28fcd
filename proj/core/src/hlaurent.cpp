#include "opchar/hlaurent.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "opchar/numtheory.hpp"

namespace opchar {

namespace {
void check_same_trunc(const HLaurent& a, const HLaurent& b) {
    if (!(a.trunc() == b.trunc()))
        throw std::invalid_argument("mixing HLaurent values with different truncations");
}

using KeepFn = std::function<bool(const HTerm&)>;

HLaurent mul_filtered(const HLaurent& a, const HLaurent& b, TruncationSpec out, const KeepFn& keep) {
    HLaurent r(out);
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms()) {
            HTerm t{ta.hexp_x2 + tb.hexp_x2, merge_parts(ta.p, tb.p), merge_parts(ta.q, tb.q)};
            if (!keep(t)) continue;
            r.add_term(t, ca * cb);
        }
    return r;
}

// exp(u) = sum u^k / k! with every intermediate product filtered by `keep`.
// The filter must be chosen so that no dropped term can contribute to a kept
// one (see the callers for the window derivations).
HLaurent exp_filtered(const HLaurent& u, TruncationSpec out, const KeepFn& keep) {
    HLaurent r = HLaurent::one(out);
    HLaurent power = HLaurent::one(out);
    Rational kfac(1);
    for (int k = 1; !power.is_zero(); ++k) {
        power = mul_filtered(power, u, out, keep);
        kfac *= k;
        if (power.is_zero()) break;
        for (const auto& [t, c] : power.terms()) r.add_term(t, c / kfac);
    }
    return r;
}

// log(1 + u) = sum (-1)^{k-1} u^k / k with the same filtering contract.
HLaurent log1p_filtered(const HLaurent& u, TruncationSpec out, const KeepFn& keep) {
    HLaurent r(out);
    HLaurent power = HLaurent::one(out);
    for (int k = 1; ; ++k) {
        power = mul_filtered(power, u, out, keep);
        if (power.is_zero()) break;
        Rational c = rat(k % 2 == 1 ? 1 : -1, k);
        for (const auto& [t, v] : power.terms()) r.add_term(t, c * v);
    }
    return r;
}

int key_x2(const HTerm& t) { return t.hexp_x2 + weight(t.p); }

// Admissibility of an Exp/Log input term for windowed expansion: positive
// weight, or weight zero with strictly negative key (so that high powers
// eventually leave every window).
void check_expandable(const HLaurent& f, const char* who) {
    for (const auto& [t, c] : f.terms()) {
        int w = t.weight();
        if (w < 0)
            throw std::invalid_argument(std::string(who) + ": term of negative weight");
        if (w == 0 && key_x2(t) >= 0)
            throw std::invalid_argument(std::string(who) +
                                        ": weight-0 term with non-negative hbar key");
    }
}

void check_f1(const HLaurent& f, const char* who) {
    for (const auto& [t, c] : f.terms())
        if (t.weight() < 1)
            throw std::invalid_argument(std::string(who) + ": input must lie in F^1");
}

// sum_m (p_m o f) / m, the log of Exp(f).
HLaurent exp_argument(const HLaurent& f) {
    HLaurent u(f.trunc());
    for (int m = 1; m <= std::max(1, f.trunc().max_weight); ++m) {
        HLaurent s = pleth_scale(f, m);
        if (s.is_zero() && m > 1) continue;
        for (const auto& [t, c] : s.terms()) u.add_term(t, c / Rational(m));
    }
    return u;
}
}  // namespace

HLaurent HLaurent::one(TruncationSpec t) {
    HLaurent f(t);
    f.add_term(HTerm{}, Rational(1));
    return f;
}

HLaurent HLaurent::hbar_power(int hexp_x2, TruncationSpec t) {
    HLaurent f(t);
    f.add_term(HTerm{hexp_x2, {}, {}}, Rational(1));
    return f;
}

HLaurent HLaurent::embed(const SymFunc& f, TruncationSpec t) {
    HLaurent r(t);
    for (const auto& [p, c] : f.terms()) r.add_term(HTerm{0, p, {}}, c);
    return r;
}

Rational HLaurent::coeff(const HTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HLaurent::add_term(const HTerm& t, const Rational& c) {
    if (t.weight() > trunc_.max_weight || t.hexp_x2 < trunc_.hexp_min_x2) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        if (!is_zero(c)) terms_.emplace(t, c);
    } else {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

HLaurent HLaurent::coerced(TruncationSpec t) const {
    HLaurent r(t);
    for (const auto& [term, c] : terms_) r.add_term(term, c);
    return r;
}

SymFunc HLaurent::hbar_coefficient(int hexp_x2, int sym_max_weight) const {
    SymFunc f(sym_max_weight);
    for (const auto& [t, c] : terms_) {
        if (t.hexp_x2 != hexp_x2) continue;
        if (!t.q.empty()) throw std::domain_error("hbar_coefficient: q-variables present");
        f.add_term(t.p, c);
    }
    return f;
}

std::map<int, Rational> HLaurent::constant_part() const {
    std::map<int, Rational> r;
    for (const auto& [t, c] : terms_)
        if (t.p.empty() && t.q.empty()) r[t.hexp_x2] = c;
    return r;
}

HLaurent HLaurent::q_renamed_to_p() const {
    HLaurent r(trunc_);
    for (const auto& [t, c] : terms_) {
        if (!t.p.empty())
            throw std::domain_error("q_renamed_to_p: value still depends on p-variables");
        r.add_term(HTerm{t.hexp_x2, t.q, {}}, c);
    }
    return r;
}

HLaurent operator+(const HLaurent& a, const HLaurent& b) {
    check_same_trunc(a, b);
    HLaurent r = a;
    for (const auto& [t, c] : b.terms()) r.add_term(t, c);
    return r;
}

HLaurent operator-(const HLaurent& a, const HLaurent& b) {
    check_same_trunc(a, b);
    HLaurent r = a;
    for (const auto& [t, c] : b.terms()) r.add_term(t, -c);
    return r;
}

HLaurent HLaurent::operator-() const {
    HLaurent r(trunc_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

HLaurent operator*(const HLaurent& a, const HLaurent& b) {
    check_same_trunc(a, b);
    TruncationSpec out = a.trunc();
    return mul_filtered(a, b, out, [&](const HTerm& t) {
        return t.weight() <= out.max_weight && t.hexp_x2 >= out.hexp_min_x2;
    });
}

HLaurent operator*(const Rational& c, const HLaurent& a) {
    HLaurent r(a.trunc());
    if (is_zero(c)) return r;
    for (const auto& [t, v] : a.terms()) r.add_term(t, c * v);
    return r;
}

bool operator==(const HLaurent& a, const HLaurent& b) {
    return a.trunc() == b.trunc() && a.terms() == b.terms();
}

HLaurent pleth_scale(const HLaurent& f, int n) {
    if (n <= 0) throw std::invalid_argument("pleth_scale: index must be positive");
    HLaurent r(f.trunc());
    for (const auto& [t, c] : f.terms())
        r.add_term(HTerm{n * t.hexp_x2, scale_parts(t.p, n), scale_parts(t.q, n)}, c);
    return r;
}

HLaurent pleth_compose(const HLaurent& f, const HLaurent& g) {
    check_f1(g, "pleth_compose");
    TruncationSpec out = g.trunc();
    KeepFn keep = [&](const HTerm& t) {
        return t.weight() <= out.max_weight && t.hexp_x2 >= out.hexp_min_x2;
    };
    HLaurent r(out);
    for (const auto& [t, c] : f.terms()) {
        if (!t.q.empty())
            throw std::invalid_argument("pleth_compose: outer value must be free of q");
        HLaurent acc = HLaurent::one(out);
        // multiply the part-scaled copies of g
        for (int part : t.p) {
            acc = mul_filtered(acc, pleth_scale(g, part), out, keep);
            if (acc.is_zero()) break;
        }
        for (const auto& [u, v] : acc.terms())
            r.add_term(HTerm{u.hexp_x2 + t.hexp_x2, u.p, u.q}, c * v);
    }
    return r;
}

HLaurent pleth_exp(const HLaurent& f) {
    check_f1(f, "pleth_exp");
    TruncationSpec out = f.trunc();
    // Products of k terms of f have weight >= k and hbar exponent at least
    // k * min(hexp_min, 0), so this window loses nothing representable.
    int floor_x2 = out.max_weight * std::min(out.hexp_min_x2, 0);
    TruncationSpec wide{out.max_weight, floor_x2};
    HLaurent u = exp_argument(f.coerced(wide));
    KeepFn keep = [&](const HTerm& t) {
        return t.weight() <= wide.max_weight && t.hexp_x2 >= wide.hexp_min_x2;
    };
    return exp_filtered(u, wide, keep).coerced(out);
}

HLaurent pleth_log(const HLaurent& f) {
    TruncationSpec out = f.trunc();
    HLaurent u = f - HLaurent::one(out);
    check_f1(u, "pleth_log");
    int floor_x2 = out.max_weight * std::min(out.hexp_min_x2, 0);
    TruncationSpec wide{out.max_weight, floor_x2};
    KeepFn keep = [&](const HTerm& t) {
        return t.weight() <= wide.max_weight && t.hexp_x2 >= wide.hexp_min_x2;
    };
    HLaurent r(wide);
    for (int m = 1; m <= std::max(1, out.max_weight); ++m) {
        if (mobius(m) == 0) continue;
        HLaurent um = pleth_scale(u.coerced(wide), m);
        HLaurent lg = log1p_filtered(um, wide, keep);
        for (const auto& [t, c] : lg.terms()) r.add_term(t, rat(mobius(m), m) * c);
    }
    return r.coerced(out);
}

namespace {
// Container spec whose hbar floor never clips terms admitted by a key-based
// filter (hexp = key - p-weight, and p-weight is bounded by the finiteness
// analysis; a very low representation floor is safe because the keep filter
// governs which terms are actually produced).
TruncationSpec key_filtered_container(int max_weight) {
    return TruncationSpec{max_weight, std::numeric_limits<int>::min() / 4};
}
}  // namespace

HLaurent pleth_exp_integrand(const HLaurent& f, int key_floor_x2) {
    check_expandable(f, "pleth_exp_integrand");
    TruncationSpec out = f.trunc();
    // A partial product that still leads to a kept term (weight <= W, key >=
    // key_floor) can gain at most W more key from its positive-weight suffix
    // factors, so intermediates need key >= key_floor - W; below that nothing
    // recovers into the output window.
    int internal_floor = key_floor_x2 - out.max_weight;
    TruncationSpec wide = key_filtered_container(out.max_weight);
    KeepFn keep = [&](const HTerm& t) {
        return t.weight() <= out.max_weight && key_x2(t) >= internal_floor;
    };
    HLaurent u = exp_argument(f.coerced(wide));
    HLaurent e = exp_filtered(u, wide, keep);
    HLaurent r(wide);
    for (const auto& [t, c] : e.terms())
        if (key_x2(t) >= key_floor_x2) r.add_term(t, c);
    return r;
}

HLaurent pleth_log_window(const HLaurent& f, int key_floor_x2) {
    TruncationSpec out = f.trunc();
    TruncationSpec wide = key_filtered_container(out.max_weight);
    HLaurent u = f.coerced(wide) - HLaurent::one(wide);
    check_expandable(u, "pleth_log_window");
    int internal_floor = key_floor_x2 - out.max_weight;
    KeepFn keep = [&](const HTerm& t) {
        return t.weight() <= out.max_weight && key_x2(t) >= internal_floor;
    };
    HLaurent r(wide);
    for (int m = 1; m <= std::max(1, out.max_weight); ++m) {
        if (mobius(m) == 0) continue;
        HLaurent um = pleth_scale(u, m);
        HLaurent lg = log1p_filtered(um, wide, keep);
        for (const auto& [t, c] : lg.terms()) r.add_term(t, rat(mobius(m), m) * c);
    }
    HLaurent res(wide);
    for (const auto& [t, c] : r.terms())
        if (key_x2(t) >= key_floor_x2) res.add_term(t, c);
    return res;
}

HLaurent laplacian(const HLaurent& f) {
    HLaurent r(f.trunc());
    for (const auto& [t, c] : f.terms()) {
        auto mults = multiplicities(t.p);
        for (const auto& [n, m] : mults) {
            // hbar^n * n/2 * d^2/dp_n^2
            if (m >= 2) {
                Partition reduced = remove_part(remove_part(t.p, n), n);
                Rational coeff = c * Rational(m) * Rational(m - 1) * rat(n, 2);
                r.add_term(HTerm{t.hexp_x2 + 2 * n, reduced, t.q}, coeff);
            }
            // hbar^{n/2 ... } : d/dp_{2n} contributes at hbar^n for part 2n
            if (n % 2 == 0) {
                int half = n / 2;
                Partition reduced = remove_part(t.p, n);
                r.add_term(HTerm{t.hexp_x2 + 2 * half, reduced, t.q}, c * Rational(m));
            }
        }
    }
    return r;
}

HLaurent exp_laplacian(const HLaurent& f, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("exp_laplacian: sign must be +-1");
    HLaurent r = f;
    HLaurent cur = f;
    Rational kfac(1);
    for (int k = 1; ; ++k) {
        cur = laplacian(cur);
        if (cur.is_zero()) break;
        kfac *= k;
        Rational s = (sign == -1 && k % 2 == 1) ? Rational(-1) : Rational(1);
        for (const auto& [t, c] : cur.terms()) r.add_term(t, s * c / kfac);
    }
    return r;
}

HLaurent hl_adjoint_apply(const HLaurent& f, const HLaurent& g, TruncationSpec out) {
    HLaurent r(out);
    for (const auto& [tf, cf] : f.terms()) {
        if (!tf.q.empty())
            throw std::invalid_argument("hl_adjoint_apply: operator must be free of q");
        for (const auto& [tg, cg] : g.terms()) {
            // apply D(p_{tf.p}) to the p-part of tg
            SymFunc cur = SymFunc::monomial(tg.p, Rational(1), out.max_weight + 64);
            bool dead = false;
            for (int part : tf.p) {
                cur = Rational(part) * pderiv(cur, part);
                if (cur.is_zero()) {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            for (const auto& [p, v] : cur.terms())
                r.add_term(HTerm{tf.hexp_x2 + tg.hexp_x2, p, tg.q}, cf * cg * v);
        }
    }
    return r;
}

HLaurent hl_omega_tilde(const HLaurent& f) {
    HLaurent r(f.trunc());
    for (const auto& [t, c] : f.terms())
        r.add_term(t, length(t.p) % 2 == 0 ? c : -c);
    return r;
}

HLaurent hl_inverse(const HLaurent& f) {
    if (f.is_zero()) throw std::invalid_argument("hl_inverse: zero is not invertible");
    // locate the minimum-weight part and require it to be a lone constant monomial
    int min_w = f.trunc().max_weight + 1;
    for (const auto& [t, c] : f.terms()) min_w = std::min(min_w, t.weight());
    const HTerm* lead = nullptr;
    for (const auto& [t, c] : f.terms())
        if (t.weight() == min_w) {
            if (lead != nullptr)
                throw std::invalid_argument("hl_inverse: no single leading unit");
            lead = &t;
        }
    if (!lead->p.empty() || !lead->q.empty())
        throw std::invalid_argument("hl_inverse: leading term is not a monomial in hbar");
    Rational c0 = f.coeff(*lead);
    TruncationSpec out{f.trunc().max_weight - min_w,
                       f.trunc().hexp_min_x2 - lead->hexp_x2};
    // f = c0 hbar^k (1 + u); invert the unit with a geometric series
    HLaurent u(TruncationSpec{f.trunc().max_weight - min_w, f.trunc().hexp_min_x2 - lead->hexp_x2});
    for (const auto& [t, c] : f.terms()) {
        if (t == *lead) continue;
        u.add_term(HTerm{t.hexp_x2 - lead->hexp_x2, t.p, t.q}, c / c0);
    }
    for (const auto& [t, c] : u.terms())
        if (t.weight() <= 0)
            throw std::invalid_argument("hl_inverse: non-leading term of non-positive relative weight");
    HLaurent acc = HLaurent::one(u.trunc());
    HLaurent power = HLaurent::one(u.trunc());
    for (int k = 1; ; ++k) {
        power = power * u;
        if (power.is_zero()) break;
        Rational s(k % 2 == 0 ? 1 : -1);
        for (const auto& [t, c] : power.terms()) acc.add_term(t, s * c);
    }
    HLaurent r(out);
    for (const auto& [t, c] : acc.terms())
        r.add_term(HTerm{t.hexp_x2 - lead->hexp_x2, t.p, t.q}, c / c0);
    return r;
}

}  // namespace opchar
