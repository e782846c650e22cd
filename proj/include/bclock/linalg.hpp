#pragma once

#include "bclock/types.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace bclock {

// Distributions are row vectors so that the forward equation reads p * P.
using RationalRowVector = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerRowVector = Eigen::Matrix<Integer, 1, Eigen::Dynamic>;
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// Plain left-to-right sum; exact for rational and integer scalars.
template <class Derived>
typename Derived::Scalar sum_exact(const Eigen::MatrixBase<Derived>& v) {
  typename Derived::Scalar s(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) s += v(i);
  return s;
}

}  // namespace bclock
