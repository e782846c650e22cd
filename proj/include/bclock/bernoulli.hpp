#pragma once

#include "bclock/polynomial.hpp"

namespace bclock {

/// B_n = B_n(0), with B_1 = -1/2. Computed by the classical recursion
/// B_n = -1/(n+1) sum_{k<n} C(n+1, k) B_k and memoized process-wide.
Rational bernoulli_number(unsigned n);

/// B_n(x) = sum_k C(n, k) B_{n-k} x^k; monic of degree n.
RationalPolynomial bernoulli_poly(unsigned n);

/// b_n(x) = B_n(x) / n!, so that b_n' = b_{n-1} and int_0^1 b_n = 0 for n > 0.
RationalPolynomial normalized_bernoulli_poly(unsigned n);

}  // namespace bclock
