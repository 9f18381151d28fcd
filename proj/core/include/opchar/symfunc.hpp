#pragma once

#include <map>

#include "opchar/partition.hpp"
#include "opchar/polyseries.hpp"
#include "opchar/rational.hpp"

namespace opchar {

// Truncated symmetric function in the power-sum basis: a finite map from
// partitions to rationals, with all stored weights <= max_weight.
class SymFunc {
public:
    using TermMap = std::map<Partition, Rational, PartitionLess>;

    explicit SymFunc(int max_weight);

    static SymFunc zero(int max_weight) { return SymFunc(max_weight); }
    static SymFunc one(int max_weight);
    static SymFunc power_sum(int n, int max_weight);           // p_n
    static SymFunc monomial(const Partition& p, const Rational& c, int max_weight);
    static SymFunc complete(int n, int max_weight);            // h_n in the p-basis
    static SymFunc elementary(int n, int max_weight);          // e_n in the p-basis

    int max_weight() const { return max_weight_; }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Partition& p) const;
    bool is_zero() const { return terms_.empty(); }
    int min_term_weight() const;  // weight of the lowest term; max_weight+1 if zero

    void add_term(const Partition& p, const Rational& c);
    SymFunc truncated(int max_weight) const;  // explicit coercion

    // Homogeneous component of the given weight (same truncation).
    SymFunc weight_part(int w) const;

    friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator*(const Rational& c, const SymFunc& a);
    SymFunc operator-() const;
    friend bool operator==(const SymFunc& a, const SymFunc& b);

private:
    int max_weight_;
    TermMap terms_;
};

// Plethysm f o g; g must have zero constant term. Output truncation is the
// minimum of the inputs'.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

// Plethysm with an explicit output truncation. Requires every term of f to
// have weight >= 2 and g complete through weight out_weight - 1; under those
// conditions the composite is exact through out_weight.
SymFunc plethysm_to(const SymFunc& f, const SymFunc& g, int out_weight);

// Formal partial derivative with respect to p_n.
SymFunc pderiv(const SymFunc& f, int n);

// <p_lambda, p_mu> = delta * z_lambda, extended bilinearly.
Rational inner_product(const SymFunc& f, const SymFunc& g);

// D(f) g where D substitutes n d/dp_n for p_n; adjoint of multiplication by f.
SymFunc adjoint_apply(const SymFunc& f, const SymFunc& g);

enum class Involution { omega, omega_tilde };

// omega: p_n -> (-1)^{n-1} p_n; omega_tilde: p_n -> -p_n.
SymFunc involution(const SymFunc& f, Involution which);

// Rank homomorphism p_1 -> x, p_n -> 0 (n > 1).
PolySeries1 rank(const SymFunc& f);

}  // namespace opchar
