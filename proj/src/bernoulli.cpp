#include "bclock/bernoulli.hpp"

#include <shared_mutex>

namespace bclock {

namespace {

struct BernoulliCache {
  std::shared_mutex mutex;
  std::vector<Rational> numbers{Rational(1)};
};

BernoulliCache& cache() {
  static BernoulliCache c;
  return c;
}

}  // namespace

Rational bernoulli_number(unsigned n) {
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    if (n < c.numbers.size()) return c.numbers[n];
  }
  std::unique_lock lock(c.mutex);
  auto& b = c.numbers;
  while (b.size() <= n) {
    const long m = static_cast<long>(b.size());
    if (m >= 3 && m % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    Rational s = 0;
    for (long k = 0; k < m; ++k) {
      if (b[k] != 0) s += Rational(binomial(m + 1, k)) * b[k];
    }
    b.push_back(-s / (m + 1));
  }
  return b[n];
}

RationalPolynomial bernoulli_poly(unsigned n) {
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = Rational(binomial(n, k)) * bernoulli_number(n - k);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial normalized_bernoulli_poly(unsigned n) {
  return bernoulli_poly(n) / Rational(factorial(n));
}

}  // namespace bclock
