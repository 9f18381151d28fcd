#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace opchar {

// Exact rationals, always canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses decimal-string numerator/denominator as used in the JSON schemas.
inline Rational rat_from_strings(const std::string& num, const std::string& den) {
    Integer n, d;
    if (n.set_str(num, 10) != 0) throw std::invalid_argument("bad integer string: " + num);
    if (d.set_str(den, 10) != 0) throw std::invalid_argument("bad integer string: " + den);
    if (d <= 0) throw std::invalid_argument("denominator must be positive: " + den);
    return rat(n, d);
}

inline std::string num_string(const Rational& r) { return r.get_num().get_str(); }
inline std::string den_string(const Rational& r) { return r.get_den().get_str(); }

inline std::string rat_string(const Rational& r) {
    if (r.get_den() == 1) return num_string(r);
    return num_string(r) + "/" + den_string(r);
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace opchar
