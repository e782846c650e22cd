#include "bclock/sum_dist.hpp"

namespace bclock {

namespace {

// E_{m-1}(-theta) as a polynomial in theta.
RationalPolynomial truncated_exp_neg(unsigned m) {
  std::vector<Rational> c(m);
  for (unsigned i = 0; i < m; ++i) c[i] = Rational((i % 2 ? -1 : 1), factorial(i));
  return RationalPolynomial(std::move(c));
}

// (x - k)^e as a polynomial in x.
RationalPolynomial shifted_power(long k, unsigned e) {
  return poly_compose_affine(RationalPolynomial::monomial(e), Rational(-k), Rational(1));
}

// Positive part power (x - k)_+^e for rational x.
Rational truncated_power(const Rational& x, long k, unsigned e) {
  const Rational d = x - k;
  if (d <= 0) return Rational(0);
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= d;
  return r;
}

void check_argument(unsigned n, const Rational& x) {
  if (x < 0 || x > n) {
    throw DomainError("argument " + to_fraction_string(x) + " outside [0, " + std::to_string(n) + "]");
  }
}

}  // namespace

Rational PiecewiseCdf::operator()(const Rational& x) const {
  check_argument(n, x);
  Integer k = mp::numerator(x) / mp::denominator(x);  // floor, x >= 0
  std::size_t idx = static_cast<std::size_t>(k.convert_to<unsigned long>());
  if (idx >= pieces.size()) idx = pieces.size() - 1;
  return pieces[idx](x);
}

PiecewiseCdf beta_sum_cdf(const BetaSumSpec& spec) {
  const unsigned n = spec.symbols();
  const unsigned M = spec.total();

  // alpha[k] is the theta-polynomial multiplying X^k = e^{-k theta}.
  std::vector<RationalPolynomial> alpha{RationalPolynomial::constant(Rational(1))};
  Integer scale = (M % 2 ? -1 : 1);
  for (unsigned m : spec.multiplicities) {
    const RationalPolynomial e = truncated_exp_neg(m);
    std::vector<RationalPolynomial> next(alpha.size() + 1);
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      next[k + 1] += alpha[k];
      next[k] -= alpha[k] * e;
    }
    alpha = std::move(next);
    scale *= factorial(m);
  }

  PiecewiseCdf cdf{n, {}};
  cdf.pieces.reserve(n);
  RationalPolynomial acc;
  for (unsigned k = 0; k < n; ++k) {
    const auto& a = alpha[k];
    for (int j = 0; j <= a.degree(); ++j) {
      const Rational& c = a.coeff(j);
      if (c == 0) continue;
      const unsigned e = M - static_cast<unsigned>(j);
      acc += shifted_power(k, e) * (c * Rational(scale, factorial(e)));
    }
    cdf.pieces.push_back(acc);
  }
  return cdf;
}

Rational cdf_beta12_sum(unsigned n, const Rational& x) {
  if (n == 0) throw DomainError("cdf_beta12_sum requires n >= 1");
  check_argument(n, x);
  Rational sum(0);
  for (unsigned k = 0; k <= n; ++k) {
    if (x <= k) break;
    for (unsigned j = 0; j <= n - k; ++j) {
      const unsigned e = 2 * n - j;
      Rational term = Rational(binomial(n, k) * binomial(n - k, j), factorial(e)) * truncated_power(x, k, e);
      if ((n - k - j) % 2) term = -term;
      sum += term;
    }
  }
  return sum * Rational(Integer(1) << n);
}

Rational cdf_general(const BetaSumSpec& spec, const Rational& x) {
  check_argument(spec.symbols(), x);
  return beta_sum_cdf(spec)(x);
}

DistributionVector dist_D(unsigned n) {
  if (n == 0) throw DomainError("dist_D requires n >= 1");
  const PiecewiseCdf F = beta_sum_cdf(MultisetSpec::uniform(n, 2));
  RationalRowVector v(n);
  Rational prev(0);
  for (unsigned d = 0; d < n; ++d) {
    const Rational cur = F(Rational(d + 1));
    v(d) = cur - prev;
    prev = cur;
  }
  return {n, DistributionKind::probability, 0, v};
}

IntegerRowVector dist_D_counts(unsigned n) {
  const DistributionVector p = dist_D(n);
  const Rational total(factorial(2 * n) >> n);
  IntegerRowVector out(n);
  for (unsigned d = 0; d < n; ++d) {
    const Rational c = p.values(d) * total;
    if (denominator(c) != 1) throw std::logic_error("non-integral lap count");
    out(d) = numerator(c);
  }
  return out;
}

Integer a_count(unsigned n) {
  if (n == 0) throw DomainError("a_count requires n >= 1");
  Integer sum = 0;
  const Integer top = factorial(2 * n);
  for (unsigned j = 0; j <= n; ++j) {
    Integer term = binomial(n, j) * (top / factorial(2 * n - j));
    sum += ((n - j) % 2) ? Integer(-term) : term;
  }
  return sum;
}

Integer complete_count(const MultisetSpec& spec) {
  const unsigned n = spec.symbols();
  const unsigned M = spec.total();
  RationalPolynomial prod = RationalPolynomial::constant(Rational(1));
  for (unsigned m : spec.multiplicities) prod = prod * truncated_exp_neg(m);
  const Integer Mfact = factorial(M);
  Rational sum(0);
  for (int j = 0; j <= prod.degree(); ++j) {
    sum += prod.coeff(j) * Rational(Mfact, factorial(M - static_cast<unsigned>(j)));
  }
  if ((n + M) % 2) sum = -sum;
  if (denominator(sum) != 1) throw std::logic_error("complete_count produced a non-integer");
  return numerator(sum);
}

Rational prob_L_ge(const MultisetSpec& spec, unsigned k) {
  if (k == 0 || k > spec.symbols()) {
    throw DomainError("k = " + std::to_string(k) + " outside 1.." + std::to_string(spec.symbols()));
  }
  return beta_sum_cdf(spec.prefix(k))(Rational(1));
}

}  // namespace bclock
