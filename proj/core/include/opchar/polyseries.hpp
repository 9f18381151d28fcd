#pragma once

#include <map>
#include <string>

#include "opchar/rational.hpp"

namespace opchar {

// Truncated one-variable power series over Q, used as the target of the rank
// homomorphism and for the classical Legendre transform.
class PolySeries1 {
public:
    PolySeries1(std::string var, int max_degree) : var_(std::move(var)), max_degree_(max_degree) {}

    const std::string& var() const { return var_; }
    int max_degree() const { return max_degree_; }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }

    Rational coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void set_coeff(int k, const Rational& c);
    bool is_zero() const { return coeffs_.empty(); }

    PolySeries1 truncated(int degree) const;
    PolySeries1 renamed(const std::string& var) const;

    friend PolySeries1 operator+(const PolySeries1& a, const PolySeries1& b);
    friend PolySeries1 operator-(const PolySeries1& a, const PolySeries1& b);
    friend PolySeries1 operator*(const PolySeries1& a, const PolySeries1& b);
    friend PolySeries1 operator*(const Rational& c, const PolySeries1& a);
    PolySeries1 operator-() const;
    friend bool operator==(const PolySeries1& a, const PolySeries1& b);

private:
    std::string var_;
    int max_degree_;
    std::map<int, Rational> coeffs_;
};

PolySeries1 ps_monomial(const std::string& var, int degree, const Rational& c, int max_degree);

PolySeries1 ps_derivative(const PolySeries1& f);

// f(g(x)); g must have zero constant term.
PolySeries1 ps_compose(const PolySeries1& f, const PolySeries1& g);

// Compositional inverse of u = c x + ... with c != 0.
PolySeries1 ps_inverse(const PolySeries1& u);

// Classical Legendre transform on Q[[x]]_*: g o f' + f = x f'.
PolySeries1 ps_legendre(const PolySeries1& f);

}  // namespace opchar
