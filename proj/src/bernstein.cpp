#include "bclock/bernstein.hpp"

#include "bclock/bernoulli.hpp"

#include <boost/math/constants/constants.hpp>
#include <mpfr.h>

namespace bclock {

RationalPolynomial bernstein_density(unsigned k, unsigned N) {
  if (N == 0 || k < 1 || k > N) throw DomainError("bernstein_density: need 1 <= k <= N");
  const RationalPolynomial one_minus_u({Rational(1), Rational(-1)});
  RationalPolynomial p = RationalPolynomial::monomial(k - 1, Rational(Integer(N) * binomial(N - 1, k - 1)));
  for (unsigned i = 0; i < N - k; ++i) p = p * one_minus_u;
  return p;
}

BernsteinExpansion monomial_to_bernstein(unsigned i, unsigned N) {
  if (i >= N) throw DomainError("monomial_to_bernstein: need 0 <= i < N");
  BernsteinExpansion e{N, RationalRowVector::Constant(N, Rational(0))};
  const Integer scale = Integer(N) * binomial(N - 1, i);
  for (unsigned j = i + 1; j <= N; ++j) e.coeffs(j - 1) = Rational(binomial(j - 1, i), scale);
  return e;
}

RationalMatrix monomial_to_bernstein_matrix(unsigned N) {
  RationalMatrix T(N, N);
  for (unsigned i = 0; i < N; ++i) T.row(i) = monomial_to_bernstein(i, N).coeffs;
  return T;
}

BernsteinExpansion to_bernstein(const RationalPolynomial& p, unsigned N) {
  if (p.degree() >= static_cast<long>(N)) throw DomainError("to_bernstein: degree must be below N");
  RationalRowVector mono = RationalRowVector::Constant(N, Rational(0));
  for (unsigned i = 0; i < p.coefficients().size(); ++i) mono(i) = p.coefficients()[i];
  return {N, mono * monomial_to_bernstein_matrix(N)};
}

RationalPolynomial to_monomial(const BernsteinExpansion& e) {
  RationalPolynomial p;
  for (unsigned k = 1; k <= e.N; ++k) {
    if (e.coeffs(k - 1) != 0) p += bernstein_density(k, e.N) * e.coeffs(k - 1);
  }
  return p;
}

RationalRowVector classical_coefficients(const BernsteinExpansion& e) {
  return e.coeffs * Rational(e.N);
}

BernsteinExpansion bernoulli_in_bernstein(unsigned n, unsigned N) {
  if (n >= N) throw DomainError("bernoulli_in_bernstein: need n < N");
  BernsteinExpansion e{N, RationalRowVector::Constant(N, Rational(0))};
  const Integer n_fact = factorial(n);
  for (unsigned j = 1; j <= N; ++j) {
    Rational s = 0;
    for (unsigned i = 0; i <= n && i <= j - 1; ++i) {
      const Rational b = bernoulli_number(n - i);
      if (b == 0) continue;
      s += Rational(binomial(j - 1, i) * binomial(n, i), n_fact * N * binomial(N - 1, i)) * b;
    }
    e.coeffs(j - 1) = s;
  }
  return e;
}

DistributionVector delta_vector(unsigned n) {
  if (n == 0) throw DomainError("delta_vector requires n >= 1");
  const unsigned len = 2 * n;
  const Rational front(mp::pow(Integer(2), n - 1), Integer(n) * factorial(n));
  DistributionVector d{n, DistributionKind::deviation, 1, RationalRowVector(len)};
  for (unsigned k = 1; k <= len; ++k) {
    Rational s = 0;
    for (unsigned i = 0; i <= n && i <= k - 1; ++i) {
      const Rational b = bernoulli_number(n - i);
      if (b == 0) continue;
      s += Rational(binomial(k - 1, i) * binomial(n, i), binomial(2 * n - 1, i)) * b;
    }
    d.values(k - 1) = front * s;
  }
  return d;
}

DistributionVector p_vector_exact(unsigned n) {
  DistributionVector d = delta_vector(n);
  const Rational uniform(1, 2 * n);
  for (Eigen::Index k = 0; k < d.values.size(); ++k) d.values(k) = uniform - d.values(k);
  d.kind = DistributionKind::probability;
  return d;
}

std::optional<Rational> max_multiplier_c(unsigned n, BernsteinNormalization basis) {
  const unsigned N = n + 1;
  BernsteinExpansion one = to_bernstein(RationalPolynomial::constant(1), N);
  BernsteinExpansion bn = bernoulli_in_bernstein(n, N);
  RationalRowVector u = one.coeffs, b = bn.coeffs;
  if (basis == BernsteinNormalization::classical) {
    u = classical_coefficients(one);
    b = classical_coefficients(bn);
  }
  std::optional<Rational> best;
  for (Eigen::Index j = 0; j < b.size(); ++j) {
    if (b(j) <= 0) continue;
    const Rational ratio = u(j) / b(j);
    if (!best || ratio < *best) best = ratio;
  }
  return best;
}

Conjecture2Verdict conjecture2_probe(unsigned n) {
  if (n == 0) throw DomainError("conjecture2_probe requires n >= 1");
  Conjecture2Verdict v;
  v.n = n;
  const RationalPolynomial density =
      RationalPolynomial::constant(1) - normalized_bernoulli_poly(n) * Rational(mp::pow(Integer(2), n));
  v.density_expansion = to_bernstein(density, n + 1);
  v.min_coefficient = v.density_expansion.coeffs.minCoeff();
  v.holds = v.min_coefficient >= 0;
  v.c_n = max_multiplier_c(n);
  return v;
}

namespace {

// Minimal RAII holder for an MPFR variable; only used for directed rounding.
class MpfrVar {
 public:
  explicit MpfrVar(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~MpfrVar() { mpfr_clear(v_); }
  MpfrVar(const MpfrVar&) = delete;
  MpfrVar& operator=(const MpfrVar&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

Conjecture1Gap conjecture1_gap(unsigned n, unsigned precision_bits, GridArgument argument) {
  if (n == 0) throw DomainError("conjecture1_gap requires n >= 1");
  if (precision_bits < 64) throw DomainError("conjecture1_gap requires precision_bits >= 64");

  const DistributionVector delta = delta_vector(n);
  const RationalPolynomial bn = normalized_bernoulli_poly(n);
  const Rational two_pow_n(mp::pow(Integer(2), n));
  const Integer denom = argument == GridArgument::over_2n_minus_1 ? Integer(2 * n - 1) : Integer(2 * n);

  Conjecture1Gap out;
  out.n = n;
  Rational best_abs = -1;
  for (unsigned k = 1; k <= 2 * n; ++k) {
    const Rational x(Integer(k - 1), denom);
    const Rational bracket = Rational(2 * n) * delta.at(static_cast<int>(k)) - two_pow_n * bn(x);
    const Rational a = mp::abs(bracket);
    if (a > best_abs) {
      best_abs = a;
      out.bracket = bracket;
      out.argmax_k = k;
    }
  }

  const auto prec = static_cast<mpfr_prec_t>(precision_bits);
  MpfrVar lo(prec), hi(prec), pi_lo(prec), pi_hi(prec), q_lo(prec), q_hi(prec);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_pow_ui(pi_lo.get(), pi_lo.get(), n, MPFR_RNDD);
  mpfr_pow_ui(pi_hi.get(), pi_hi.get(), n, MPFR_RNDU);
  mpfr_set_q(q_lo.get(), best_abs.backend().data(), MPFR_RNDD);
  mpfr_set_q(q_hi.get(), best_abs.backend().data(), MPFR_RNDU);
  mpfr_mul(lo.get(), pi_lo.get(), q_lo.get(), MPFR_RNDD);
  mpfr_mul(hi.get(), pi_hi.get(), q_hi.get(), MPFR_RNDU);

  // Enclosure must agree in the leading 10 bits: hi - lo <= 2^-10 hi.
  MpfrVar width(prec);
  mpfr_sub(width.get(), hi.get(), lo.get(), MPFR_RNDU);
  mpfr_mul_2si(width.get(), width.get(), 10, MPFR_RNDU);
  if (mpfr_cmp(width.get(), hi.get()) > 0) {
    throw ConvergenceError("conjecture1_gap: precision too low for n = " + std::to_string(n));
  }

  ScopedPrecision scope(precision_bits);
  Real pi_n = mp::pow(boost::math::constants::pi<Real>(), n);
  out.gap = pi_n * to_real(best_abs);
  return out;
}

}  // namespace bclock
