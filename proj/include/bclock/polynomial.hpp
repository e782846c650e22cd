#pragma once

#include "bclock/types.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace bclock {

/// Dense univariate polynomial; coefficient i multiplies x^i.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// an empty coefficient list and degree -1.
template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }

  static Polynomial monomial(std::size_t power, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(power + 1, Scalar(0));
    v[power] = c;
    return Polynomial(std::move(v));
  }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  Polynomial& operator/=(const Scalar& s) {
    for (auto& c : coeffs_) c /= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Scalar& s) { return a /= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Horner evaluation; `Arg` may differ from `Scalar` as long as Scalar
  /// converts to it.
  template <class Arg>
  Arg operator()(const Arg& x) const {
    Arg acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Arg(*it);
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

template <class Scalar>
Scalar poly_eval(const Polynomial<Scalar>& p, const Scalar& x) {
  return p(x);
}

/// Evaluates a polynomial at an argument of another scalar type, converting
/// each coefficient through `convert`.
template <class Arg, class Scalar, class Convert>
Arg poly_eval_as(const Polynomial<Scalar>& p, const Arg& x, Convert convert) {
  Arg acc(0);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + convert(*it);
  return acc;
}

template <class Scalar>
Polynomial<Scalar> poly_derivative(const Polynomial<Scalar>& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Scalar> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Scalar(static_cast<long>(i));
  return Polynomial<Scalar>(std::move(out));
}

/// Primitive vanishing at 0.
template <class Scalar>
Polynomial<Scalar> poly_antiderivative(const Polynomial<Scalar>& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return {};
  std::vector<Scalar> out(c.size() + 1, Scalar(0));
  for (std::size_t i = 0; i < c.size(); ++i) out[i + 1] = c[i] / Scalar(static_cast<long>(i + 1));
  return Polynomial<Scalar>(std::move(out));
}

/// Integral over [0, 1].
template <class Scalar>
Scalar poly_unit_integral(const Polynomial<Scalar>& p) {
  Scalar s(0);
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] / Scalar(static_cast<long>(i + 1));
  return s;
}

/// The unique primitive of p whose integral over [0, 1] is zero.
template <class Scalar>
Polynomial<Scalar> poly_antiderivative_zero_mean(const Polynomial<Scalar>& p) {
  Polynomial<Scalar> q = poly_antiderivative(p);
  return q - Polynomial<Scalar>::constant(poly_unit_integral(q));
}

/// x -> p(a + b x).
template <class Scalar>
Polynomial<Scalar> poly_compose_affine(const Polynomial<Scalar>& p, const Scalar& a, const Scalar& b) {
  const Polynomial<Scalar> inner({a, b});
  Polynomial<Scalar> acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Polynomial<Scalar>::constant(*it);
  return acc;
}

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const Polynomial<Scalar>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Scalar& c = p.coefficients()[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    os << "(" << c << ")";
    if (i == 1) os << "x";
    if (i > 1) os << "x^" << i;
    first = false;
  }
  return os;
}

}  // namespace bclock
