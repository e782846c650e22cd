#include "bclock/types.hpp"

#include <cmath>
#include <regex>

namespace bclock {

namespace {
std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}
}  // namespace

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

ScopedPrecision::ScopedPrecision(unsigned bits)
    : lock_(precision_mutex()), saved_digits10_(Real::default_precision()) {
  Real::default_precision(digits10_for_bits(bits));
}

ScopedPrecision::~ScopedPrecision() { Real::default_precision(saved_digits10_); }

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer falling_factorial(long x, unsigned k) {
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x - static_cast<long>(i);
  return r;
}

std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

// GMP's string constructor treats a leading 0 as an octal prefix, so digits
// are normalized before conversion.
Integer decimal_integer(std::string digits) {
  bool negative = false;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
    negative = digits[0] == '-';
    digits.erase(0, 1);
  }
  const auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  Integer z(digits);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  static const std::regex fraction(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$)");
  static const std::regex decimal(R"(^\s*([+-]?)(\d*)\.(\d+)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    Integer num = decimal_integer(m[1].str());
    Integer den = m[2].matched ? decimal_integer(m[2].str()) : Integer(1);
    return make_rational(num, den);
  }
  if (std::regex_match(text, m, decimal)) {
    const std::string whole = m[2].str().empty() ? "0" : m[2].str();
    const std::string frac = m[3].str();
    Integer num = decimal_integer(whole + frac);
    Integer den = mp::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Rational q = make_rational(num, den);
    return m[1].str() == "-" ? Rational(-q) : q;
  }
  throw DomainError("not a rational number: '" + text + "'");
}

Real to_real(const Rational& q) {
  return Real(numerator(q)) / Real(denominator(q));
}

}  // namespace bclock
