#pragma once

#include "dortho/rational.hpp"

namespace dortho {

// n! for n >= 0.
Integer factorial(long n);

// binomial(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, long k);

// Falling factorial a (a-1) ... (a-k+1).
Rational falling_factorial(const Rational& a, long k);

} // namespace dortho
