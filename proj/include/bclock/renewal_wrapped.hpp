#pragma once

#include "bclock/types.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace bclock {

using Complex = std::complex<Real>;

/// The m zeros of the truncated exponential E_m(x) = 1 + x + ... + x^m/m!.
///
/// Values are stored at precision_bits; residuals hold |E_m(alpha_k)|.
struct RootSet {
  unsigned m = 0;
  unsigned precision_bits = kDefaultPrecisionBits;
  std::vector<Complex> roots;
  std::vector<Real> residuals;
};

/// Aberth-Ehrlich iteration on the monic integer polynomial m! E_m, started on
/// a rotated circle of radius max(1, m/e) and polished with guard bits.
/// Certified by residual < 2^{-bits/2}, conjugate pairing, distinctness and
/// the power sums sum alpha^{-1} = -1, sum alpha^{-j} = 0 (2 <= j <= m),
/// sum alpha^{-m-1} = 1/m!. Throws ConvergenceError on failure.
RootSet exponential_poly_roots(unsigned m, unsigned precision_bits = kDefaultPrecisionBits);

/// Mean number of renewals by time t for beta(1, m) jumps, 0 <= t <= 1:
/// M(t) = -1 - sum alpha_k^{-1} e^{-alpha_k t}.
Real mean_function(Real t, const RootSet& roots);
Real mean_function(double t, const RootSet& roots);

/// k-th derivative of M; k = 0 gives M itself.
Real mean_function_derivative(unsigned k, Real t, const RootSet& roots);

/// Expected length of the longest initial run on an infinite clock with
/// multiplicity m: 1 + M(1).
Real expected_longest_run(unsigned m, unsigned precision_bits = kDefaultPrecisionBits);

/// mu(j, m) = sum_k alpha_k^j, from the falling-factorial recursion
/// mu(j, m) = (m)_{j+1} - sum_{i<j} (m)_{i+1} mu(j-i-1, m).
Rational root_moments(unsigned j, unsigned m);

/// n! sum_{j=0}^{n} (e^{zt} (1-t)^j - 1) z^{j-n-1} / j!, which equals
/// int_0^t e^{zx} (1-x)^n dx for z != 0.
Complex incomplete_exp_integral(const Complex& z, unsigned n, const Real& t);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Simulated N(t) = #{k >= 1 : S_k <= t} with beta(1, m) jumps 1 - U^{1/m}.
MonteCarloEstimate renewal_mc_oracle(unsigned m, double t, std::uint64_t trials, std::uint64_t seed);

/// Gamma(r, lambda) reduced modulo 1, evaluated at u.
struct WrappedGammaParams {
  unsigned r = 1;
  Rational lambda{1};
  Rational u{0};
};

struct WrappedGammaValue {
  Real value;
  Real error_bound;  ///< bound on the neglected tail
  unsigned terms = 0;
};

/// lambda^r / Gamma(r) e^{-lambda u} sum_{m >= 0} (u+m)^{r-1} e^{-lambda m},
/// summed until the geometric tail bound is below tol.
WrappedGammaValue wrapped_gamma_density_series(const WrappedGammaParams& p, const Real& tol,
                                               unsigned precision_bits = kDefaultPrecisionBits);

/// lambda e^{lambda(1-u)} / (e^lambda - 1), the r = 1 density.
Real wrapped_gamma_closed_form_r1(const Rational& lambda, const Rational& u,
                                  unsigned precision_bits = kDefaultPrecisionBits);

/// Exact partial sum 1 + sum_{n=r}^{terms} (-1)^{n-r+1} C(n-1, r-1) b_n(u) lambda^n.
/// Requires 0 < lambda < 2 pi.
Rational wrapped_gamma_bernoulli_partial_sum(const WrappedGammaParams& p, unsigned terms);

/// The partial sum converted to Real, with the tail bounded through
/// |b_n(u)| <= 4 / (2 pi)^n.
WrappedGammaValue wrapped_gamma_bernoulli_expansion(const WrappedGammaParams& p, unsigned terms,
                                                    unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace bclock
