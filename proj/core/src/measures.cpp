#include "opchar/measures.hpp"

#include <limits>
#include <stdexcept>

#include "opchar/numtheory.hpp"

namespace opchar {

Moment gaussian_moment(int n, int m, Measure measure) {
    if (n <= 0 || m < 0) throw std::invalid_argument("gaussian_moment: need n >= 1, m >= 0");
    bool shifted = (measure != Measure::dnu) && (n % 2 == 0);
    int shift_sign = measure == Measure::dmu_reflected ? -1 : 1;
    Rational total(0);
    if (!shifted) {
        if (m % 2 == 0) {
            // (m-1)!! n^{m/2}
            total = Rational(double_factorial(m - 1));
            for (int i = 0; i < m / 2; ++i) total *= n;
        }
    } else {
        // E[(y + s*hbar^{n/2})^m] with y centered of variance n hbar^n;
        // every summand carries hbar^{nm/2}.
        for (int j = 0; j <= m; j += 2) {
            Rational term = binomial(static_cast<unsigned>(m), static_cast<unsigned>(j)) *
                            Rational(double_factorial(j - 1));
            for (int i = 0; i < j / 2; ++i) term *= n;
            if (shift_sign < 0 && (m - j) % 2 == 1) term = -term;
            total += term;
        }
    }
    return Moment{total, n * m};
}

HLaurent functional_integral(const HLaurent& integrand, Measure measure, TruncationSpec out) {
    HLaurent r(out);
    for (const auto& [t, c] : integrand.terms()) {
        if (t.weight() < 0)
            throw std::invalid_argument(
                "functional_integral: integrand term of negative weight; no finite "
                "contribution bound exists for this window");
        Rational factor = c;
        int hexp = t.hexp_x2;
        for (const auto& [n, m] : multiplicities(t.p)) {
            Moment mom = gaussian_moment(n, m, measure);
            if (is_zero(mom.coeff)) {
                factor = Rational(0);
                break;
            }
            factor *= mom.coeff;
            hexp += mom.hexp_x2;
        }
        if (is_zero(factor)) continue;
        r.add_term(HTerm{hexp, {}, t.q}, factor);
    }
    return r;
}

HLaurent wick_log_integral(const std::vector<HLaurent>& summands, Measure measure,
                           TruncationSpec out) {
    if (summands.empty()) throw std::invalid_argument("wick_log_integral: empty integrand");
    int W = out.max_weight;
    // The log needs its input exact one weight's worth of hbar below the
    // requested floor, so expand and integrate on the deeper window.
    TruncationSpec deep{W, out.hexp_min_x2 - W};
    TruncationSpec loose{W, std::numeric_limits<int>::min() / 4};
    HLaurent arg(loose);
    for (const auto& s : summands)
        for (const auto& [t, c] : s.terms()) arg.add_term(t, c);
    HLaurent expanded = pleth_exp_integrand(arg, deep.hexp_min_x2);
    HLaurent integrated = functional_integral(expanded, measure, deep);
    return pleth_log_window(integrated, out.hexp_min_x2).coerced(out);
}

}  // namespace opchar
