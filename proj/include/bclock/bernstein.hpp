#pragma once

#include "bclock/linalg.hpp"
#include "bclock/polynomial.hpp"

#include <optional>
#include <vector>

namespace bclock {

/// Coefficients c_1..c_N of sum_k c_k f_{k:N} in the density-normalized
/// Bernstein basis f_{k:N}(u) = N C(N-1, k-1) u^{k-1} (1-u)^{N-k}.
/// coeffs(k-1) holds c_k.
struct BernsteinExpansion {
  unsigned N = 0;
  RationalRowVector coeffs;
};

enum class DistributionKind { probability, deviation };

/// Exact distribution (or deviation from uniform) over consecutive integer
/// outcomes first_index, first_index + 1, ...
struct DistributionVector {
  unsigned n = 0;
  DistributionKind kind = DistributionKind::probability;
  int first_index = 1;
  RationalRowVector values;

  Rational at(int outcome) const { return values(outcome - first_index); }
  Eigen::Index size() const { return values.size(); }
};

/// f_{k:N}, the beta(k, N+1-k) density; integrates to 1.
RationalPolynomial bernstein_density(unsigned k, unsigned N);

/// x^i in the basis f_{.:N}: c_j = C(j-1, i) / (N C(N-1, i)) for j > i.
BernsteinExpansion monomial_to_bernstein(unsigned i, unsigned N);

/// N x N change of basis; row i is monomial_to_bernstein(i, N).
RationalMatrix monomial_to_bernstein_matrix(unsigned N);

/// Expansion of a polynomial of degree < N in the basis f_{.:N}.
BernsteinExpansion to_bernstein(const RationalPolynomial& p, unsigned N);

/// Inverse of to_bernstein: sum_k c_k f_{k:N} as a monomial-basis polynomial.
RationalPolynomial to_monomial(const BernsteinExpansion& e);

/// Coefficients in the classical basis C(N-1, k-1) x^{k-1} (1-x)^{N-k};
/// each is N times the density-basis coefficient.
RationalRowVector classical_coefficients(const BernsteinExpansion& e);

/// b_n in the basis f_{.:N}, coefficient j = sum_i C(j-1,i) C(n,i) B_{n-i} / (n! N C(N-1,i)).
BernsteinExpansion bernoulli_in_bernstein(unsigned n, unsigned N);

/// delta_{k:2n} = 1/(2n) - P(I_n = k), from the closed Bernoulli-number sum.
DistributionVector delta_vector(unsigned n);

/// P(I_n = k) for the Bernoulli clock on 2n hours.
DistributionVector p_vector_exact(unsigned n);

enum class BernsteinNormalization { density, classical };

/// Greatest c with every degree-n Bernstein coefficient of 1 - c b_n(x)
/// non-negative. std::nullopt stands for +infinity (b_n has no positive
/// coefficient). The value does not depend on the normalization, since both
/// bases rescale the constant and b_n coefficients by the same factor; the
/// parameter selects which coefficient vectors are compared.
std::optional<Rational> max_multiplier_c(unsigned n,
                                         BernsteinNormalization basis = BernsteinNormalization::density);

struct Conjecture2Verdict {
  unsigned n = 0;
  BernsteinExpansion density_expansion;  ///< 1 - 2^n b_n in f_{.:n+1}
  Rational min_coefficient;
  std::optional<Rational> c_n;
  bool holds = false;  ///< all coefficients >= 0
};

/// Positivity probe of the degree-n Bernstein expansion of 1 - 2^n b_n.
Conjecture2Verdict conjecture2_probe(unsigned n);

enum class GridArgument {
  over_2n_minus_1,  ///< b_n evaluated at (k-1)/(2n-1)
  over_2n,          ///< b_n evaluated at (k-1)/(2n)
};

struct Conjecture1Gap {
  unsigned n = 0;
  Real gap;           ///< pi^n |bracket| at the requested precision
  Rational bracket;   ///< 2n delta_k - 2^n b_n(x_k) at the maximizing k
  unsigned argmax_k = 0;
};

/// sup_k |2n pi^n delta_{k:2n} - (2 pi)^n b_n(x_k)|, with the bracket exact
/// and pi^n enclosed between directed roundings. Throws ConvergenceError if
/// the enclosure is wider than 2^-10 relative.
Conjecture1Gap conjecture1_gap(unsigned n, unsigned precision_bits = 256,
                               GridArgument argument = GridArgument::over_2n_minus_1);

}  // namespace bclock
