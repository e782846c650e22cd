#pragma once

#include "bclock/bernstein.hpp"
#include "bclock/multiset.hpp"

#include <vector>

namespace bclock {

/// Distribution function of S = X_1 + ... + X_n, stored as one polynomial per
/// integer knot: pieces[k] is valid on [k, k+1).
struct PiecewiseCdf {
  unsigned n = 0;
  std::vector<RationalPolynomial> pieces;

  /// Exact value for 0 <= x <= n; x = n is taken from the last piece.
  Rational operator()(const Rational& x) const;
};

/// CDF of the sum of independent beta(1, m_i) variables.
///
/// The Laplace transform of S is (-1)^M (prod m_i!) theta^{-M}
/// prod_i (e^{-theta} - E_{m_i - 1}(-theta)); expanding the product as
/// sum alpha_{k,j} theta^j e^{-k theta} and inverting term by term gives
/// P(S <= x) = (-1)^M (prod m_i!) sum alpha_{k,j} (x-k)_+^{M-j} / (M-j)!.
PiecewiseCdf beta_sum_cdf(const BetaSumSpec& spec);

/// P(S_n <= x) for n beta(1, 2) summands, straight from the double sum
/// 2^n sum_{k,j} C(n,k) C(n-k,j) (-1)^{n-k-j} (x-k)_+^{2n-j} / (2n-j)!.
Rational cdf_beta12_sum(unsigned n, const Rational& x);

/// P(S <= x) through beta_sum_cdf.
Rational cdf_general(const BetaSumSpec& spec, const Rational& x);

/// Law of the lap count D_n of the Bernoulli clock on 2n hours, outcomes 0..n-1:
/// P(D_n = d) = P(S_n <= d+1) - P(S_n <= d).
DistributionVector dist_D(unsigned n);

/// dist_D(n) scaled by (2n)!/2^n: the number of arrangements with D_n = d.
IntegerRowVector dist_D_counts(unsigned n);

/// a(n) = sum_j (-1)^{n-j} C(n,j) (2n)!/(2n-j)!, the number of arrangements of
/// 1,1,2,2,...,n,n that contain 1,2,...,n as a subsequence.
Integer a_count(unsigned n);

/// Number of multiset permutations containing 1, 2, ..., n as a subsequence:
/// (-1)^M sum_j M! c_j / (M-j)! with c_j = (-1)^n [theta^j] prod E_{m_i-1}(-theta).
Integer complete_count(const MultisetSpec& spec);

/// P(L_n >= k) = P(X_1 + ... + X_k <= 1), for 1 <= k <= n.
Rational prob_L_ge(const MultisetSpec& spec, unsigned k);

}  // namespace bclock
