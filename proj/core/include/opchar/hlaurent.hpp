#pragma once

#include <functional>
#include <map>

#include "opchar/partition.hpp"
#include "opchar/rational.hpp"
#include "opchar/symfunc.hpp"

namespace opchar {

// Truncation window for Laurent series in hbar^{1/2} with symmetric-function
// coefficients. A term is representable iff its weight (2*hexp + |p| + |q|)
// is <= max_weight and its hbar exponent is >= hexp_min (stored doubled).
struct TruncationSpec {
    int max_weight;
    int hexp_min_x2;

    friend bool operator==(const TruncationSpec&, const TruncationSpec&) = default;
};

struct HTerm {
    int hexp_x2 = 0;  // hbar exponent, doubled so half-integers stay integral
    Partition p;
    Partition q;

    int weight() const { return hexp_x2 + opchar::weight(p) + opchar::weight(q); }
    friend auto operator<=>(const HTerm&, const HTerm&) = default;
};

class HLaurent {
public:
    using TermMap = std::map<HTerm, Rational>;

    explicit HLaurent(TruncationSpec trunc) : trunc_(trunc) {}

    static HLaurent zero(TruncationSpec t) { return HLaurent(t); }
    static HLaurent one(TruncationSpec t);
    static HLaurent hbar_power(int hexp_x2, TruncationSpec t);
    // Embeds a symmetric function at hbar^0.
    static HLaurent embed(const SymFunc& f, TruncationSpec t);

    const TruncationSpec& trunc() const { return trunc_; }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const HTerm& t) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const HTerm& t, const Rational& c);
    HLaurent coerced(TruncationSpec t) const;

    // Coefficient of hbar^{hexp_x2/2} as a symmetric function in p;
    // throws if any matching term carries q-variables.
    SymFunc hbar_coefficient(int hexp_x2, int sym_max_weight) const;

    // The part with no p and no q variables, as a map hexp_x2 -> coefficient.
    std::map<int, Rational> constant_part() const;

    // Swap the roles of p and q variables.
    HLaurent q_renamed_to_p() const;

    friend HLaurent operator+(const HLaurent& a, const HLaurent& b);
    friend HLaurent operator-(const HLaurent& a, const HLaurent& b);
    friend HLaurent operator*(const HLaurent& a, const HLaurent& b);
    friend HLaurent operator*(const Rational& c, const HLaurent& a);
    HLaurent operator-() const;
    friend bool operator==(const HLaurent& a, const HLaurent& b);

private:
    TruncationSpec trunc_;
    TermMap terms_;
};

// p_n o f under axiom (3'): hbar -> hbar^n, p_k -> p_{nk}, q_k -> q_{nk}.
HLaurent pleth_scale(const HLaurent& f, int n);

// f o g for f with inert hbar coefficients (each p_lambda of f is substituted
// multiplicatively; q-parts in f are not allowed). g must lie in F^1.
HLaurent pleth_compose(const HLaurent& f, const HLaurent& g);

// Plethystic exponential Exp(f) = (sum_n h_n) o f for f in F^1.
HLaurent pleth_exp(const HLaurent& f);

// Plethystic logarithm, inverse of Exp on 1 + F^1.
HLaurent pleth_log(const HLaurent& f);

// Exp variant admitting weight-0 terms whose post-integration hbar exponent
// (key = hexp + p-weight) is <= -1/2; keeps exactly the terms with
// weight <= trunc.max_weight and key >= key_floor_x2. Used to expand
// functional-integral integrands.
HLaurent pleth_exp_integrand(const HLaurent& f, int key_floor_x2);

// Log variant with the same windowing, for series 1 + u where u may contain
// weight-0 terms of negative hbar exponent (e.g. outputs of formal Gaussian
// integrals).
HLaurent pleth_log_window(const HLaurent& f, int key_floor_x2);

// The Laplacian sum_n hbar^n (n/2 d^2/dp_n^2 + d/dp_{2n}).
HLaurent laplacian(const HLaurent& f);

// exp(sign * Delta); the sum is finite on any truncation since Delta lowers
// p-weight by at least 2.
HLaurent exp_laplacian(const HLaurent& f, int sign);

// D(f) g with p_n -> n d/dp_n in f; hbar and q act as scalars.
HLaurent hl_adjoint_apply(const HLaurent& f, const HLaurent& g, TruncationSpec out);

// Coefficient-wise omega-tilde: p_n -> -p_n (q untouched).
HLaurent hl_omega_tilde(const HLaurent& f);

// Multiplicative inverse; requires the minimum-weight part to be a single
// invertible monomial c hbar^k.
HLaurent hl_inverse(const HLaurent& f);

}  // namespace opchar
