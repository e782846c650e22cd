#include "bclock/clock.hpp"
#include "bclock/rng.hpp"
#include "bclock/sum_dist.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>

using namespace bclock;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

IntegerRowVector ints(std::initializer_list<long> v) {
  IntegerRowVector r(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (long x : v) r(i++) = x;
  return r;
}

// Fraction of 10^6 simulated sums X_1 + ... + X_n (X_i ~ beta(1, m_i)) at or below x.
std::pair<double, double> mc_cdf(const std::vector<unsigned>& m, double x, std::uint64_t seed) {
  const std::uint64_t trials = 1000000;
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, t);
    double s = 0;
    for (unsigned mi : m) s += 1.0 - std::pow(rng.uniform(), 1.0 / mi);
    if (s <= x) ++hits;
  }
  const double p = static_cast<double>(hits) / trials;
  return {p, std::sqrt(p * (1 - p) / trials)};
}

std::vector<MultisetSpec> specs_up_to(unsigned max_total) {
  std::vector<MultisetSpec> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned)> rec = [&](unsigned left) {
    if (!cur.empty()) out.emplace_back(cur);
    for (unsigned m = 1; m <= left; ++m) {
      cur.push_back(m);
      rec(left - m);
      cur.pop_back();
    }
  };
  rec(max_total);
  return out;
}

}  // namespace

TEST_CASE("beta(1,2) sums: small cases") {
  for (int i = 0; i <= 16; ++i) {
    const Rational x(i, 16);
    CHECK(cdf_beta12_sum(1, x) == 2 * x - x * x);
  }
  CHECK(cdf_beta12_sum(2, q(1)) == q(5, 6));
  CHECK(cdf_beta12_sum(3, q(1)) == q(47, 90));
  CHECK_THROWS_AS(cdf_beta12_sum(2, q(5, 2)), DomainError);
  CHECK_THROWS_AS(cdf_beta12_sum(2, q(-1, 3)), DomainError);
}

TEST_CASE("piecewise CDF: boundary values, monotonicity, agreement with the direct sum") {
  for (unsigned n = 1; n <= 8; ++n) {
    const PiecewiseCdf F = beta_sum_cdf(MultisetSpec::uniform(n, 2));
    CHECK(F(q(0)) == 0);
    CHECK(F(q(n)) == 1);
    Rational prev = 0;
    for (unsigned i = 0; i <= 64; ++i) {
      const Rational x(static_cast<long>(i * n), 64);
      const Rational v = F(x);
      CHECK(v >= prev);
      prev = v;
    }
    for (unsigned i = 0; i <= 32; ++i) {
      const Rational x(static_cast<long>(i * n), 32);
      CHECK(F(x) == cdf_beta12_sum(n, x));
    }
    CHECK_THROWS_AS(F(q(n + 1)), DomainError);
  }
}

TEST_CASE("general CDF") {
  CHECK(cdf_general(MultisetSpec({2, 2}), q(1)) == q(5, 6));
  CHECK(cdf_general(MultisetSpec({1, 1, 1}), q(1)) == q(1, 6));
  // Irwin-Hall: P(U_1 + U_2 <= 3/2) = 7/8.
  CHECK(cdf_general(MultisetSpec({1, 1}), q(3, 2)) == q(7, 8));
  // Single beta(1, m): 1 - (1 - x)^m.
  for (unsigned m = 1; m <= 6; ++m) {
    const Rational x(2, 7);
    Rational tail = 1;
    for (unsigned i = 0; i < m; ++i) tail *= 1 - x;
    CHECK(cdf_general(MultisetSpec({m}), x) == 1 - tail);
  }
  const Rational exact = cdf_general(MultisetSpec({2, 3}), q(2));
  CHECK(exact == 1);  // the support of X_1 + X_2 is [0, 2]
  const Rational mid = cdf_general(MultisetSpec({2, 3}), q(3, 4));
  const auto [p, se] = mc_cdf({2, 3}, 0.75, 41);
  CHECK(std::abs(p - mid.convert_to<double>()) < 3 * se);
}

TEST_CASE("law of the lap count D_n") {
  CHECK(dist_D(1).values(0) == 1);
  CHECK(dist_D(1).first_index == 0);
  CHECK(dist_D_counts(2) == ints({5, 1}));
  CHECK(dist_D_counts(3) == ints({47, 42, 1}));
  CHECK(dist_D(3).values(0) == q(47, 90));
  CHECK(dist_D_counts(4) == ints({641, 1659, 219, 1}));
  CHECK(dist_D_counts(5) == ints({11389, 72572, 28470, 968, 1}));
  CHECK(dist_D_counts(6) == ints({248749, 3610485, 3263402, 357746, 4017, 1}));
  for (unsigned n = 1; n <= 8; ++n) {
    CHECK(dist_D_counts(n) == joint_recursion(n).laps_marginal());
    CHECK(sum_exact(dist_D(n).values) == 1);
  }
}

TEST_CASE("a(n)") {
  CHECK(a_count(1) == 1);
  CHECK(a_count(2) == 5);
  CHECK(a_count(3) == 47);
  CHECK(a_count(5) == 11389);
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(Rational(a_count(n)) == cdf_beta12_sum(n, q(1)) * Rational(factorial(2 * n) >> n));
    if (n <= 6) CHECK(a_count(n) == complete_count(MultisetSpec::uniform(n, 2)));
  }
}

TEST_CASE("complete count matches brute force for every spec with M <= 8") {
  for (const MultisetSpec& spec : specs_up_to(8)) {
    CAPTURE(spec.to_string());
    const JointEnumeration e = enumerate_joint(spec);
    CHECK(complete_count(spec) == e.run_counts(spec.symbols() - 1));
    CHECK(Rational(complete_count(spec), spec.permutation_count()) == prob_L_ge(spec, spec.symbols()));
  }
}

TEST_CASE("complete count: documented values and larger specs") {
  CHECK(complete_count(MultisetSpec({1, 1, 1, 1, 1})) == 1);
  CHECK(complete_count(MultisetSpec({2, 2})) == 5);
  CHECK(complete_count(MultisetSpec({2, 2, 2})) == 47);
  for (const auto& m : std::vector<std::vector<unsigned>>{{2, 3, 2}, {1, 3, 1, 2}, {4, 1, 3, 2}, {3, 3, 3, 3}}) {
    const MultisetSpec spec(m);
    CHECK(complete_count(spec) == enumerate_joint(spec).run_counts(spec.symbols() - 1));
  }
}

TEST_CASE("P(L_n >= k)") {
  const MultisetSpec s({2, 2, 2});
  CHECK(prob_L_ge(s, 1) == 1);
  CHECK(prob_L_ge(s, 3) == q(47, 90));
  CHECK_THROWS_AS(prob_L_ge(s, 0), DomainError);
  CHECK_THROWS_AS(prob_L_ge(s, 4), DomainError);

  const MultisetSpec s23({2, 3});
  const Rational exact = prob_L_ge(s23, 2);
  const ClockSummary sim = simulate_clock_summary(s23, 77, 1000000);
  const double p = static_cast<double>(sim.run_counts[1]) / 1e6;
  const double se = std::sqrt(p * (1 - p) / 1e6);
  CHECK(std::abs(p - exact.convert_to<double>()) < 3 * se);

  // Each prefix probability agrees with enumeration of the full spec.
  const MultisetSpec big({2, 3, 1, 2});
  const JointEnumeration e = enumerate_joint(big);
  Integer at_least = 0;
  for (unsigned k = big.symbols(); k >= 1; --k) {
    at_least += e.run_counts(k - 1);
    CHECK(Rational(at_least, big.permutation_count()) == prob_L_ge(big, k));
  }
}
