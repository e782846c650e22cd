#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>

namespace bclock {

namespace mp = boost::multiprecision;

// Expression templates are disabled so that `auto` and Eigen containers
// always hold concrete values.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 128;

/// Precondition or domain violation (bad index, argument outside support).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative numerical method failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sets the working precision of `Real` for the lifetime of the object.
///
/// MPFR's default precision in Boost is process-global, so high-precision
/// sections are serialized through a recursive mutex; nested scopes on the
/// same thread are allowed.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_digits10_;
};

/// Decimal digits needed to carry `bits` binary digits.
unsigned digits10_for_bits(unsigned bits);

Integer factorial(unsigned n);
Integer binomial(long n, long k);  ///< zero outside 0 <= k <= n
Integer falling_factorial(long x, unsigned k);  ///< x (x-1) ... (x-k+1)

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(num, den);
}

inline Integer numerator(const Rational& q) { return mp::numerator(q); }
inline Integer denominator(const Rational& q) { return mp::denominator(q); }

/// "p/q" with the denominator always present, e.g. "-1/2", "3/1".
std::string to_fraction_string(const Rational& q);

/// Parses "p", "p/q" or a finite decimal such as "-0.125" exactly.
Rational parse_rational(const std::string& text);

Real to_real(const Rational& q);

}  // namespace bclock
