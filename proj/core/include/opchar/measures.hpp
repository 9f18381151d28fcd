#pragma once

#include <vector>

#include "opchar/hlaurent.hpp"

namespace opchar {

// Formal Gaussian product measures on the p-coordinates. Every variable p_n
// has variance n hbar^n; dmu translates the even coordinates by hbar^{n/2},
// dmu_reflected by -hbar^{n/2}; dnu is centered.
enum class Measure { dnu, dmu, dmu_reflected };

struct Moment {
    Rational coeff;
    int hexp_x2;  // always n*m for the m-th moment of p_n
};

// Exact m-th moment of p_n: a single monomial r * hbar^{n m / 2}.
Moment gaussian_moment(int n, int m, Measure measure);

// Integrates an already expanded integrand term-by-term: each p-monomial is
// replaced by the product of its per-variable moments, leaving a series in
// hbar and q. The integrand must contain every term with weight <= out.max_weight
// whose key (hexp + p-weight, which is the output hbar exponent, doubled)
// lies in [out.hexp_min_x2, out.max_weight]; pleth_exp_integrand produces
// exactly such expansions. Terms of negative weight are rejected.
HLaurent functional_integral(const HLaurent& integrand, Measure measure, TruncationSpec out);

// Full pipeline for Wick-type formulas: Exp of the summed arguments expanded
// over the window certified for `out`, integrated, and plethystically
// logged. Output is a function of hbar and q only.
HLaurent wick_log_integral(const std::vector<HLaurent>& summands, Measure measure,
                           TruncationSpec out);

}  // namespace opchar
