#pragma once

#include <vector>

#include "opchar/rational.hpp"

namespace opchar {

// Euler totient.
long euler_phi(long n);

// Moebius function; 0 on non-squarefree input.
int mobius(long n);

// Divisors of n in increasing order.
std::vector<long> divisors(long n);

Integer factorial(unsigned n);

// k!! with (-1)!! = 0!! = 1.
Integer double_factorial(long k);

Rational binomial(unsigned n, unsigned k);

}  // namespace opchar
