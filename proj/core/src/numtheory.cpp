#include "opchar/numtheory.hpp"

#include <stdexcept>

namespace opchar {

long euler_phi(long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi requires n >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

int mobius(long n) {
    if (n <= 0) throw std::invalid_argument("mobius requires n >= 1");
    int sign = 1;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            sign = -sign;
        }
    }
    if (m > 1) sign = -sign;
    return sign;
}

std::vector<long> divisors(long n) {
    if (n <= 0) throw std::invalid_argument("divisors requires n >= 1");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer double_factorial(long k) {
    if (k <= 0) return 1;
    Integer f = 1;
    for (long i = k; i >= 2; i -= 2) f *= i;
    return f;
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    Integer num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return rat(num, den);
}

}  // namespace opchar
