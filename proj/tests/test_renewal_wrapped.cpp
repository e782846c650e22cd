#include "bclock/bernoulli.hpp"
#include "bclock/renewal_wrapped.hpp"
#include "bclock/rng.hpp"

#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

using namespace bclock;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

double d(const Real& x) { return x.convert_to<double>(); }

}  // namespace

TEST_CASE("roots of E_m") {
  ScopedPrecision scope(128);
  const RootSet r1 = exponential_poly_roots(1);
  REQUIRE(r1.roots.size() == 1);
  CHECK(abs(r1.roots[0] - Complex(-1)) < Real(1e-35));
  const RootSet r2 = exponential_poly_roots(2);
  REQUIRE(r2.roots.size() == 2);
  CHECK(abs(r2.roots[0] - Complex(Real(-1), Real(-1))) < Real(1e-35));
  CHECK(abs(r2.roots[1] - Complex(Real(-1), Real(1))) < Real(1e-35));
  CHECK_THROWS_AS(exponential_poly_roots(0), DomainError);

  for (unsigned m = 1; m <= 24; ++m) {
    const RootSet r = exponential_poly_roots(m);
    CAPTURE(m);
    CHECK(r.roots.size() == m);
    for (const auto& res : r.residuals) CHECK(res < Real(1e-19));
    // Power sums of reciprocals, checked here at a fixed tolerance.
    Complex s1(0), s_last(0);
    for (const auto& a : r.roots) {
      s1 += Complex(1) / a;
      s_last += pow(Complex(1) / a, static_cast<int>(m + 1));
    }
    CHECK(abs(s1 + Complex(1)) < Real(1e-25));
    CHECK(abs(s_last - Complex(Real(1) / Real(factorial(m)))) < Real(1e-25));
  }
}

TEST_CASE("root moments: recursion against the numerical roots") {
  CHECK(root_moments(0, 5) == 5);
  CHECK(root_moments(1, 2) == -2);
  ScopedPrecision scope(128);
  for (unsigned m = 1; m <= 6; ++m) {
    const RootSet r = exponential_poly_roots(m);
    for (unsigned j = 0; j <= 8; ++j) {
      Complex s(0);
      for (const auto& a : r.roots) s += pow(a, static_cast<int>(j));
      CAPTURE(m);
      CAPTURE(j);
      CHECK(abs(s - Complex(to_real(root_moments(j, m)))) < Real(1e-20) * (1 + abs(to_real(root_moments(j, m)))));
    }
  }
}

TEST_CASE("mean function: closed forms") {
  ScopedPrecision scope(128);
  const RootSet r1 = exponential_poly_roots(1);
  for (int i = 0; i <= 10; ++i) {
    const Real t = Real(i) / 10;
    CHECK(abs(mean_function(t, r1) - (exp(t) - 1)) < Real(1e-30));
  }
  for (unsigned m = 1; m <= 8; ++m) CHECK(abs(mean_function(Real(0), exponential_poly_roots(m))) < Real(1e-30));
  const Real e = exp(Real(1));
  CHECK(abs(expected_longest_run(1) - e) < Real(1e-30));
  CHECK(abs(expected_longest_run(2) - e * (cos(Real(1)) + sin(Real(1)))) < Real(1e-30));
  CHECK(d(expected_longest_run(2)) == doctest::Approx(3.7560492).epsilon(1e-7));
  CHECK_THROWS_AS(mean_function(Real(1.5), r1), DomainError);
  CHECK_THROWS_AS(mean_function(Real(-0.1), r1), DomainError);
}

TEST_CASE("mean function: corrupted roots are rejected") {
  ScopedPrecision scope(128);
  RootSet bad = exponential_poly_roots(3);
  bad.roots[1] += Complex(Real(0), Real(1e-3));
  CHECK_THROWS_AS(mean_function(Real(0.5), bad), ConvergenceError);
}

TEST_CASE("mean function solves the delay differential equation") {
  ScopedPrecision scope(128);
  for (unsigned m = 1; m <= 6; ++m) {
    const RootSet r = exponential_poly_roots(m);
    for (int i = 0; i < 32; ++i) {
      const Real t = Real(i) / 31;
      Real acc = 1;
      for (unsigned k = 0; k <= m; ++k) {
        const Real term = mean_function_derivative(k, t, r) / Real(factorial(k));
        acc += (k % 2) ? Real(-term) : term;
      }
      CAPTURE(m);
      CAPTURE(i);
      CHECK(abs(acc) < Real(1e-20));
    }
  }
}

TEST_CASE("mean function satisfies the renewal equation") {
  using boost::math::quadrature::gauss_kronrod;
  for (unsigned m = 1; m <= 4; ++m) {
    const RootSet r = exponential_poly_roots(m);
    auto M = [&](double t) { return d(mean_function(t, r)); };
    for (double t : {0.1, 0.35, 0.6, 0.85, 1.0}) {
      const double first = 1 - std::pow(1 - t, m);
      auto integrand = [&](double x) { return M(t - x) * std::pow(1 - x, m - 1); };
      const double integral = gauss_kronrod<double, 31>::integrate(integrand, 0.0, t, 15, 1e-14);
      CAPTURE(m);
      CAPTURE(t);
      CHECK(std::abs(M(t) - first - m * integral) < 1e-10);
    }
  }
}

TEST_CASE("incomplete exponential integral") {
  using F50 = boost::multiprecision::cpp_bin_float_50;
  using boost::math::quadrature::tanh_sinh;
  ScopedPrecision scope(128);
  CounterRng rng(123, 0);
  tanh_sinh<F50> integrator;
  for (int trial = 0; trial < 12; ++trial) {
    const double a = rng.uniform() * 6 - 3;
    const double b = rng.uniform() * 6 - 3;
    const double t = rng.uniform();
    const Complex z{Real(a), Real(b)};
    for (unsigned n = 0; n <= 5; ++n) {
      const Complex closed = incomplete_exp_integral(z, n, Real(t));
      auto re = [&](const F50& x) { return exp(a * x) * cos(b * x) * pow(1 - x, n); };
      auto im = [&](const F50& x) { return exp(a * x) * sin(b * x) * pow(1 - x, n); };
      const F50 nre = integrator.integrate(re, F50(0), F50(t));
      const F50 nim = integrator.integrate(im, F50(0), F50(t));
      const F50 dre = F50(closed.real().str(40)) - nre;
      const F50 dim = F50(closed.imag().str(40)) - nim;
      CAPTURE(n);
      CHECK(static_cast<double>(sqrt(dre * dre + dim * dim)) < 1e-18);
    }
  }
  CHECK_THROWS_AS(incomplete_exp_integral(Complex(0), 2, Real(0.5)), DomainError);
}

TEST_CASE("renewal simulation") {
  const auto est = renewal_mc_oracle(1, 1.0, 200000, 5);
  CHECK(std::abs(est.mean - (std::exp(1.0) - 1)) < 3 * est.std_error);
  CHECK(est.std_error > 0);
  const RootSet r3 = exponential_poly_roots(3);
  const auto est3 = renewal_mc_oracle(3, 0.5, 200000, 6);
  CHECK(std::abs(est3.mean - d(mean_function(0.5, r3))) < 3 * est3.std_error);
  CHECK_THROWS_AS(renewal_mc_oracle(2, 1.0, 0, 1), DomainError);
}

TEST_CASE("wrapped gamma: series") {
  ScopedPrecision scope(128);
  const WrappedGammaValue v = wrapped_gamma_density_series({1, q(1), q(0)}, Real(1e-30));
  const Real e = exp(Real(1));
  CHECK(abs(v.value - e / (e - 1)) < Real(1e-29));
  CHECK(v.error_bound < Real(1e-30));
  for (unsigned r : {1u, 2u, 5u}) {
    for (const Rational& lambda : {q(1, 3), q(1), q(4)}) {
      for (int k = 0; k < 8; ++k) {
        const Rational u(k, 8);
        const Real s = wrapped_gamma_density_series({r, lambda, u}, Real(1e-30)).value;
        if (r == 1) CHECK(abs(s - wrapped_gamma_closed_form_r1(lambda, u)) < Real(1e-28));
        CHECK(s > 0);
      }
    }
  }
  CHECK_THROWS_AS(wrapped_gamma_density_series({1, q(1), q(0)}, Real(1e-60), 128), DomainError);
  CHECK_THROWS_AS(wrapped_gamma_density_series({1, q(0), q(0)}, Real(1e-10)), DomainError);
  CHECK_THROWS_AS(wrapped_gamma_density_series({1, q(1), q(1)}, Real(1e-10)), DomainError);
}

TEST_CASE("wrapped gamma: density integrates to one") {
  using boost::math::quadrature::gauss_kronrod;
  for (unsigned r : {1u, 2u, 3u}) {
    auto f = [&](double u) {
      // u is irrational in general; evaluate at the nearest 2^-40 dyadic.
      const Rational uq(static_cast<long>(std::llround(u * 1099511627776.0)), 1099511627776L);
      return wrapped_gamma_density_series({r, q(3, 2), uq}, Real(1e-20), 128).value.convert_to<double>();
    };
    const double integral = gauss_kronrod<double, 15>::integrate(f, 0.0, 1.0, 5, 1e-12);
    CHECK(std::abs(integral - 1) < 1e-10);
  }
}

TEST_CASE("wrapped gamma: Bernoulli expansion") {
  ScopedPrecision scope(128);
  // r = 1 reduces to 1 + sum (-1)^n b_n(u) lambda^n.
  const Rational lambda(1, 2);
  Rational direct = 1;
  Rational lp = 1;
  for (unsigned n = 1; n <= 20; ++n) {
    lp *= lambda;
    direct += Rational(n % 2 ? -1 : 1) * normalized_bernoulli_poly(n)(q(1, 3)) * lp;
  }
  CHECK(wrapped_gamma_bernoulli_partial_sum({1, lambda, q(1, 3)}, 20) == direct);

  // Leading deviation is -lambda^r b_r(u).
  const Rational two_terms = wrapped_gamma_bernoulli_partial_sum({2, lambda, q(0)}, 2);
  CHECK(two_terms == 1 - lambda * lambda * normalized_bernoulli_poly(2)(q(0)));
  CHECK(two_terms == 1 - q(1, 48));

  // Each b_n integrates to zero, so the partial sums integrate to one exactly.
  for (unsigned r = 1; r <= 3; ++r) {
    RationalPolynomial in_u = RationalPolynomial::constant(q(1));
    Rational lp2 = 1;
    for (unsigned n = 1; n <= 25; ++n) {
      lp2 *= lambda;
      if (n < r) continue;
      const Rational c = Rational(binomial(n - 1, r - 1)) * lp2 * Rational((n - r + 1) % 2 ? -1 : 1);
      in_u += normalized_bernoulli_poly(n) * c;
    }
    CHECK(poly_unit_integral(in_u) == 1);
    CHECK(in_u(q(2, 5)) == wrapped_gamma_bernoulli_partial_sum({r, lambda, q(2, 5)}, 25));
  }

  const WrappedGammaValue v = wrapped_gamma_bernoulli_expansion({2, lambda, q(1, 4)}, 30);
  const WrappedGammaValue s = wrapped_gamma_density_series({2, lambda, q(1, 4)}, Real(1e-30));
  CHECK(abs(v.value - s.value) < Real(1e-8));
  CHECK(abs(v.value - s.value) <= v.error_bound + s.error_bound);
  CHECK_THROWS_AS(wrapped_gamma_bernoulli_partial_sum({1, q(7), q(0)}, 10), DomainError);
  CHECK_THROWS_AS(wrapped_gamma_bernoulli_partial_sum({3, q(1), q(0)}, 2), DomainError);
}
