// Copyright 2026 The gwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "gwalk/spectral.hpp"

// Chebyshev polynomials of the first kind:
//   T_0 = 1, T_1 = x, T_n = 2x T_{n-1} - T_{n-2}.

namespace gwalk {

using BigInt = boost::multiprecision::cpp_int;
/// Always reduced, denominator positive.
using Rational = boost::multiprecision::cpp_rational;

inline double cheb_scalar(std::size_t n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (std::size_t k = 2; k <= n; ++k) {
    double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  assert(std::abs(x) > 1.0 || std::abs(cur) <= 1.0 + 1e-12);
  return cur;
}

/**
 * Exact T_n(p/q) for increasing n.
 *
 * Tracks the integer N_n = q^n T_n(p/q), which satisfies
 * N_n = 2p N_{n-1} - q^2 N_{n-2}, so no gcd is taken per step.
 */
class ChebyshevRationalSequence {
 public:
  explicit ChebyshevRationalSequence(const Rational& x)
      : p_(boost::multiprecision::numerator(x)),
        q_(boost::multiprecision::denominator(x)),
        two_p_(2 * p_),
        q_sq_(q_ * q_),
        prev_(0),
        cur_(1),
        qpow_(1) {}

  std::size_t degree() const { return n_; }

  void advance() {
    if (n_ == 0) {
      prev_ = cur_;
      cur_ = p_;
    } else {
      BigInt next = two_p_ * cur_ - q_sq_ * prev_;
      prev_ = std::move(cur_);
      cur_ = std::move(next);
    }
    qpow_ *= q_;
    ++n_;
  }

  Rational value() const { return Rational(cur_, qpow_); }

  /// T_n(x) == +1 or -1, exactly.
  bool is_unit() const { return cur_ == qpow_ || cur_ == -qpow_; }

 private:
  BigInt p_, q_, two_p_, q_sq_;
  BigInt prev_, cur_, qpow_;
  std::size_t n_ = 0;
};

inline Rational cheb_rational(std::size_t n, const Rational& x) {
  ChebyshevRationalSequence seq(x);
  while (seq.degree() < n) seq.advance();
  return seq.value();
}

/// sum_i T_n(lambda_i) E_i
inline Eigen::MatrixXd cheb_matrix(const SpectralDecomposition& sd, std::size_t n) {
  return poly_apply(sd, [n](double x) { return cheb_scalar(n, x); });
}

/// T_n(M) by the matrix three-term recurrence.
inline Eigen::MatrixXd cheb_matrix_recurrence(const Eigen::MatrixXd& m, std::size_t n) {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  if (n == 0) return id;
  Eigen::MatrixXd prev = id, cur = m;
  for (std::size_t k = 2; k <= n; ++k) {
    Eigen::MatrixXd next = 2.0 * m * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/**
 * True iff x is one of -1, -1/2, 0, 1/2, 1: the only rationals in [-1, 1]
 * that are cosines of rational multiples of pi, hence the only rational
 * eigenvalues compatible with T_tau(x) = +-1 for some tau.
 */
inline bool rational_pst_filter(const Rational& x) {
  if (abs(x) > 1) throw std::domain_error("rational_pst_filter needs |x| <= 1");
  const BigInt& den = boost::multiprecision::denominator(x);
  return den == 1 || den == 2;
}

}  // namespace gwalk
