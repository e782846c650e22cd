#include "bclock/renewal_wrapped.hpp"

#include "bclock/bernoulli.hpp"
#include "bclock/rng.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bclock {

namespace {

constexpr unsigned kGuardBits = 32;
constexpr unsigned kMaxAberthIterations = 500;

Real pow2(long e) { return mp::ldexp(Real(1), static_cast<int>(e)); }

Real pi_real() {
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

// Horner evaluation of p and p' for real coefficients at complex z.
void eval_with_derivative(const std::vector<Real>& c, const Complex& z, Complex& p, Complex& dp) {
  p = Complex(c.back());
  dp = Complex(0);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + Complex(c[i]);
  }
}

[[noreturn]] void fail_roots(unsigned m, const std::string& why) {
  throw ConvergenceError("roots of E_" + std::to_string(m) + ": " + why);
}

void check_t(const Real& t) {
  if (t < 0 || t > 1) throw DomainError("t must lie in [0, 1]");
}

Real re_checked(const Complex& z, const RootSet& rs, const char* what) {
  const Real tol = pow2(-static_cast<long>(rs.precision_bits) / 2) * (1 + abs(z.real()));
  if (abs(z.imag()) > tol) {
    std::ostringstream os;
    os << what << ": imaginary residue " << z.imag().convert_to<double>() << " exceeds tolerance";
    throw ConvergenceError(os.str());
  }
  return z.real();
}

}  // namespace

RootSet exponential_poly_roots(unsigned m, unsigned precision_bits) {
  if (m == 0) throw DomainError("exponential_poly_roots requires m >= 1");
  if (precision_bits < 32) throw DomainError("precision_bits must be at least 32");
  // Rounding noise in m! E_m near a zero grows roughly like m! e^|z| / |z|^m,
  // which costs up to about m bits; the guard covers it.
  const unsigned work_bits = precision_bits + kGuardBits + m;
  ScopedPrecision scope(work_bits);

  // m! E_m(x) = sum_k (m!/k!) x^k, monic.
  std::vector<Real> c(m + 1);
  for (unsigned k = 0; k <= m; ++k) c[k] = Real(factorial(m) / factorial(k));

  const Real pi = pi_real();
  const Real radius = std::max(Real(1), Real(m) / exp(Real(1)));
  std::vector<Complex> z(m);
  for (unsigned k = 0; k < m; ++k) {
    const Real angle = 2 * pi * (Real(k) + Real(0.5)) / m + Real(0.4) / m;
    z[k] = Complex(radius * cos(angle), radius * sin(angle));
  }

  const Real step_tol = pow2(-static_cast<long>(precision_bits) - 16);
  unsigned iter = 0;
  unsigned quiet = 0;
  Real max_step(0);
  for (; iter < kMaxAberthIterations && quiet < 2; ++iter) {
    max_step = 0;
    for (unsigned k = 0; k < m; ++k) {
      Complex p, dp;
      eval_with_derivative(c, z[k], p, dp);
      if (p == Complex(0)) continue;
      const Complex w = p / dp;
      Complex s(0);
      for (unsigned j = 0; j < m; ++j) {
        if (j != k) s += Complex(1) / (z[k] - z[j]);
      }
      const Complex step = w / (Complex(1) - w * s);
      z[k] -= step;
      max_step = std::max(max_step, Real(abs(step) / std::max(Real(1), Real(abs(z[k])))));
    }
    quiet = max_step < step_tol ? quiet + 1 : 0;
  }
  if (quiet < 2) {
    std::ostringstream os;
    os << "no convergence after " << iter << " Aberth iterations at " << work_bits
       << " bits (last relative step " << max_step.convert_to<double>() << ")";
    fail_roots(m, os.str());
  }

  // Conjugate pairing: E_m has real coefficients and exactly m mod 2 real zeros.
  const Real pair_tol = pow2(-static_cast<long>(precision_bits) / 2);
  std::vector<Complex> upper, lower, real;
  for (const auto& r : z) {
    if (abs(r.imag()) <= pair_tol * std::max(Real(1), Real(abs(r)))) {
      real.emplace_back(r.real(), Real(0));
    } else {
      (r.imag() > 0 ? upper : lower).push_back(r);
    }
  }
  if (real.size() != m % 2 || upper.size() != lower.size()) fail_roots(m, "roots do not pair into conjugates");
  std::vector<Complex> paired = real;
  for (const auto& a : upper) {
    auto best = std::min_element(lower.begin(), lower.end(), [&](const Complex& x, const Complex& y) {
      return abs(x - conj(a)) < abs(y - conj(a));
    });
    if (abs(*best - conj(a)) > pair_tol * std::max(Real(1), Real(abs(a)))) fail_roots(m, "unmatched conjugate");
    const Real re = (a.real() + best->real()) / 2;
    const Real im = (a.imag() - best->imag()) / 2;
    paired.emplace_back(re, im);
    paired.emplace_back(re, -im);
    lower.erase(best);
  }
  std::sort(paired.begin(), paired.end(), [](const Complex& x, const Complex& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });

  RootSet rs;
  rs.m = m;
  rs.precision_bits = precision_bits;
  const Real mfact(factorial(m));
  const Real residual_tol = pow2(-static_cast<long>(precision_bits) / 2);
  for (const auto& r : paired) {
    Complex p, dp;
    eval_with_derivative(c, r, p, dp);
    const Real res = abs(p) / mfact;
    if (res >= residual_tol) fail_roots(m, "residual above tolerance");
    rs.roots.push_back(r);
    rs.residuals.push_back(res);
  }

  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i + 1; j < m; ++j) {
      if (abs(rs.roots[i] - rs.roots[j]) < pow2(-static_cast<long>(precision_bits) / 4)) {
        fail_roots(m, "roots are not distinct");
      }
    }
  }

  // Power sums of the reciprocals.
  std::vector<Complex> inv(m), pw(m, Complex(1));
  for (unsigned k = 0; k < m; ++k) inv[k] = Complex(1) / rs.roots[k];
  for (unsigned j = 1; j <= m + 1; ++j) {
    Complex s(0);
    for (unsigned k = 0; k < m; ++k) {
      pw[k] *= inv[k];
      s += pw[k];
    }
    Real expected(0);
    if (j == 1) expected = -1;
    if (j == m + 1) expected += Real(1) / mfact;
    if (abs(s - Complex(expected)) > residual_tol) fail_roots(m, "power sum " + std::to_string(j) + " check failed");
  }
  return rs;
}

Real mean_function(Real t, const RootSet& rs) { return mean_function_derivative(0, std::move(t), rs); }

Real mean_function(double t, const RootSet& rs) {
  ScopedPrecision scope(rs.precision_bits);
  return mean_function(Real(t), rs);
}

Real mean_function_derivative(unsigned k, Real t, const RootSet& rs) {
  check_t(t);
  ScopedPrecision scope(rs.precision_bits);
  Complex s(0);
  for (const auto& a : rs.roots) s += pow(-a, static_cast<int>(k)) * exp(-a * Complex(t)) / a;
  Real v = -re_checked(s, rs, "mean function");
  if (k == 0) v -= 1;
  return v;
}

Real expected_longest_run(unsigned m, unsigned precision_bits) {
  const RootSet rs = exponential_poly_roots(m, precision_bits);
  ScopedPrecision scope(precision_bits);
  return 1 + mean_function(Real(1), rs);
}

Rational root_moments(unsigned j, unsigned m) {
  if (m == 0) throw DomainError("root_moments requires m >= 1");
  std::vector<Integer> mu(j + 1);
  for (unsigned a = 0; a <= j; ++a) {
    Integer v = falling_factorial(m, a + 1);
    for (unsigned i = 0; i < a; ++i) v -= falling_factorial(m, i + 1) * mu[a - i - 1];
    mu[a] = v;
  }
  return Rational(mu[j]);
}

Complex incomplete_exp_integral(const Complex& z, unsigned n, const Real& t) {
  if (z == Complex(0)) throw DomainError("incomplete_exp_integral requires z != 0");
  const Complex ezt = exp(z * Complex(t));
  const Real one_minus_t = 1 - t;
  Complex sum(0);
  Real pow_t(1);
  Real jfact(1);
  for (unsigned j = 0; j <= n; ++j) {
    if (j > 0) {
      pow_t *= one_minus_t;
      jfact *= j;
    }
    sum += (ezt * Complex(pow_t) - Complex(1)) * pow(z, static_cast<int>(j) - static_cast<int>(n) - 1) / Complex(jfact);
  }
  return sum * Complex(Real(factorial(n)));
}

MonteCarloEstimate renewal_mc_oracle(unsigned m, double t, std::uint64_t trials, std::uint64_t seed) {
  if (m == 0) throw DomainError("renewal_mc_oracle requires m >= 1");
  if (trials == 0) throw DomainError("renewal_mc_oracle requires at least one trial");
  if (!(t >= 0)) throw DomainError("renewal_mc_oracle requires t >= 0");
  const double inv_m = 1.0 / m;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    CounterRng rng(seed, i);
    double s = 0.0;
    std::uint64_t count = 0;
    for (;;) {
      s += 1.0 - std::pow(rng.uniform(), inv_m);
      if (s > t) break;
      ++count;
    }
    sum += static_cast<double>(count);
    sum_sq += static_cast<double>(count) * static_cast<double>(count);
  }
  const double n = static_cast<double>(trials);
  const double mean = sum / n;
  const double var = trials > 1 ? (sum_sq - n * mean * mean) / (n - 1) : 0.0;
  return {mean, std::sqrt(std::max(var, 0.0) / n)};
}

namespace {

void check_wrapped(const WrappedGammaParams& p) {
  if (p.r == 0) throw DomainError("shape r must be positive");
  if (p.lambda <= 0) throw DomainError("rate lambda must be positive");
  if (p.u < 0 || p.u >= 1) throw DomainError("u must lie in [0, 1)");
}

}  // namespace

WrappedGammaValue wrapped_gamma_density_series(const WrappedGammaParams& p, const Real& tol, unsigned precision_bits) {
  check_wrapped(p);
  ScopedPrecision scope(precision_bits + kGuardBits);
  if (!(tol > 0)) throw DomainError("tol must be positive");
  if (tol < pow2(8 - static_cast<long>(precision_bits))) {
    throw DomainError("tol is below what " + std::to_string(precision_bits) + "-bit arithmetic can deliver");
  }
  const Real lambda = to_real(p.lambda);
  const Real u = to_real(p.u);
  const Real prefactor = pow(lambda, static_cast<int>(p.r)) / Real(factorial(p.r - 1)) * exp(-lambda * u);
  const Real q = exp(-lambda);

  Real sum(0);
  Real decay(1);  // e^{-lambda m}
  const unsigned cap = 10'000'000;
  for (unsigned m = 0; m < cap; ++m) {
    const Real term = pow(u + m, static_cast<int>(p.r) - 1) * decay;
    sum += term;
    if (m >= 1) {
      const Real rho = q * pow(1 + Real(1) / m, static_cast<int>(p.r) - 1);
      if (rho < 1) {
        const Real tail = prefactor * term * rho / (1 - rho);
        if (tail < tol) return {prefactor * sum, tail, m + 1};
      }
    }
    decay *= q;
  }
  throw ConvergenceError("wrapped gamma series did not reach the tolerance");
}

Real wrapped_gamma_closed_form_r1(const Rational& lambda, const Rational& u, unsigned precision_bits) {
  check_wrapped({1, lambda, u});
  ScopedPrecision scope(precision_bits);
  const Real l = to_real(lambda);
  return l * exp(l * (1 - to_real(u))) / expm1(l);
}

Rational wrapped_gamma_bernoulli_partial_sum(const WrappedGammaParams& p, unsigned terms) {
  check_wrapped(p);
  {
    ScopedPrecision scope(64);
    if (to_real(p.lambda) >= 2 * pi_real()) {
      throw DomainError("the Bernoulli expansion needs 0 < lambda < 2 pi");
    }
  }
  if (terms < p.r) throw DomainError("terms must be at least r");
  Rational sum(1);
  Rational lp(1);
  for (unsigned n = 1; n <= terms; ++n) {
    lp *= p.lambda;
    if (n < p.r) continue;
    Rational term = Rational(binomial(n - 1, p.r - 1)) * normalized_bernoulli_poly(n)(p.u) * lp;
    if ((n - p.r + 1) % 2) term = -term;
    sum += term;
  }
  return sum;
}

WrappedGammaValue wrapped_gamma_bernoulli_expansion(const WrappedGammaParams& p, unsigned terms,
                                                    unsigned precision_bits) {
  const Rational partial = wrapped_gamma_bernoulli_partial_sum(p, terms);
  ScopedPrecision scope(precision_bits);
  const Real x = to_real(p.lambda) / (2 * pi_real());
  // Tail sum_{n > terms} 4 C(n-1, r-1) x^n; successive ratios n x / (n - r + 1) decrease in n.
  const unsigned first = terms + 1;
  const Real lead = 4 * Real(binomial(first - 1, p.r - 1)) * pow(x, static_cast<int>(first));
  const Real ratio = Real(first) * x / Real(first - p.r + 1);
  Real bound = ratio < 1 ? Real(lead / (1 - ratio)) : Real(std::numeric_limits<double>::infinity());
  return {to_real(partial), bound, terms};
}

}  // namespace bclock
