#include "bclock/circular_conv.hpp"

#include "bclock/bernoulli.hpp"

#include <map>
#include <shared_mutex>
#include <utility>

namespace bclock {

namespace {

RationalPolynomial monomial_conv_closed_form(unsigned m, unsigned n) {
  // requires n >= 1
  std::vector<Rational> c(m + n + 1, Rational(0));
  c[0] = Rational(factorial(m) * factorial(n), factorial(m + n + 1));
  const Integer n_fact = factorial(n);
  Integer rising = 1;  // (m+1)(m+2)...(m+k+1)
  for (unsigned k = 0; k < n; ++k) {
    rising *= m + k + 1;
    const Rational w(n_fact, factorial(n - k) * rising);
    c[n - k] += w;
    c[m + k + 1] -= w;
  }
  return RationalPolynomial(std::move(c));
}

}  // namespace

RationalPolynomial monomial_circular_conv(unsigned m, unsigned n) {
  static std::shared_mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, RationalPolynomial> memo;
  // Symmetric in (m, n); the closed form sums over its second argument.
  const auto key = std::minmax(m, n);
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  RationalPolynomial r = key.first == 0 ? RationalPolynomial::constant(Rational(1, key.second + 1))
                                        : monomial_conv_closed_form(key.second, key.first);
  std::unique_lock lock(mutex);
  return memo.emplace(key, std::move(r)).first->second;
}

CircleFunctionPoly circular_conv(const CircleFunctionPoly& f, const CircleFunctionPoly& g) {
  RationalPolynomial out;
  const auto& fc = f.poly.coefficients();
  const auto& gc = g.poly.coefficients();
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (fc[i] == 0) continue;
    for (std::size_t j = 0; j < gc.size(); ++j) {
      if (gc[j] == 0) continue;
      out += monomial_circular_conv(static_cast<unsigned>(i), static_cast<unsigned>(j)) * (fc[i] * gc[j]);
    }
  }
  return {out};
}

CircleFunctionPoly b1_conv_power(unsigned n) {
  if (n == 0) throw DomainError("b1_conv_power requires n >= 1");
  const CircleFunctionPoly b1{normalized_bernoulli_poly(1)};
  CircleFunctionPoly acc = b1;
  for (unsigned k = 1; k < n; ++k) acc = circular_conv(acc, b1);
  return acc;
}

}  // namespace bclock
