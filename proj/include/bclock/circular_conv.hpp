#pragma once

#include "bclock/polynomial.hpp"

namespace bclock {

/// A polynomial read as a function on the circle [0, 1).
struct CircleFunctionPoly {
  RationalPolynomial poly;

  friend bool operator==(const CircleFunctionPoly&, const CircleFunctionPoly&) = default;
};

/// x^m (*) x^n on [0, 1), where (f (*) g)(u) = int_0^1 f(v) g({u - v}) dv.
///
/// Closed form, for n >= 1:
///   m! n! / (m+n+1)! + sum_{k<n} n! / ((n-k)! (m+1)...(m+k+1)) (x^{n-k} - x^{m+k+1})
/// and 1 (*) 1 = 1. Results are memoized on the unordered pair {m, n}.
RationalPolynomial monomial_circular_conv(unsigned m, unsigned n);

/// Bilinear extension of monomial_circular_conv.
CircleFunctionPoly circular_conv(const CircleFunctionPoly& f, const CircleFunctionPoly& g);

/// n-fold circular convolution of b_1(x) = x - 1/2 with itself.
CircleFunctionPoly b1_conv_power(unsigned n);

/// Midpoint-rule approximation of (f (*) g)(u) on `grid` cells. Test oracle,
/// independent of the closed-form path.
template <class Float>
Float quadrature_conv_oracle(const RationalPolynomial& f, const RationalPolynomial& g, const Rational& u,
                             unsigned grid) {
  if (grid < 16) throw DomainError("quadrature grid must be at least 16");
  const auto to_float = [](const Rational& q) { return static_cast<Float>(q); };
  const Float uf = to_float(u);
  const Float h = Float(1) / Float(grid);
  Float sum(0);
  for (unsigned i = 0; i < grid; ++i) {
    const Float v = (Float(i) + Float(0.5)) * h;
    Float w = uf - v;
    if (w < 0) w += 1;
    sum += poly_eval_as(f, v, to_float) * poly_eval_as(g, w, to_float);
  }
  return sum * h;
}

}  // namespace bclock
