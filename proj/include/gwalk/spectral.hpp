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

#include <cmath>
#include <concepts>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gwalk {

inline constexpr double kDefaultClusterTol = 1e-8;
inline constexpr double kDefaultSupportTol = 1e-9;

/**
 * Distinct eigenvalues of a real symmetric matrix, in decreasing order,
 * with their orthogonal projectors: M = sum_i eigenvalues[i] * projectors[i].
 */
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Eigen::MatrixXd> projectors;
  std::size_t dimension = 0;

  std::size_t distinct() const { return eigenvalues.size(); }

  std::size_t rank(std::size_t i) const {
    return static_cast<std::size_t>(std::lround(projectors.at(i).trace()));
  }

  Eigen::MatrixXd reconstruct() const {
    const auto n = static_cast<Eigen::Index>(dimension);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < distinct(); ++i)
      m += eigenvalues[i] * projectors[i];
    return m;
  }
};

/**
 * Eigen-decomposes a symmetric matrix and merges eigenvalues whose sorted
 * neighbours lie within cluster_tol of each other. The merged eigenvalue is
 * the cluster mean; its projector is V_c V_c^T over the cluster's
 * eigenvectors.
 */
inline SpectralDecomposition decompose(const Eigen::MatrixXd& m,
                                       double cluster_tol = kDefaultClusterTol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  if (m.size() == 0) throw std::invalid_argument("matrix is empty");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver did not converge");
  const Eigen::VectorXd& vals = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd& vecs = solver.eigenvectors();

  SpectralDecomposition sd;
  sd.dimension = static_cast<std::size_t>(m.rows());
  const Eigen::Index n = m.rows();
  Eigen::Index hi = n;
  // Walk from the top so the output is in decreasing order.
  while (hi > 0) {
    Eigen::Index lo = hi - 1;
    while (lo > 0 && vals(lo) - vals(lo - 1) <= cluster_tol) --lo;
    const Eigen::Index count = hi - lo;
    const auto block = vecs.middleCols(lo, count);
    sd.eigenvalues.push_back(vals.segment(lo, count).mean());
    sd.projectors.push_back(block * block.transpose());
    hi = lo;
  }
  return sd;
}

/// p(M) = sum_i p(lambda_i) E_i for any callable p: double -> double.
template <typename F>
  requires std::invocable<F&, double>
Eigen::MatrixXd poly_apply(const SpectralDecomposition& sd, F&& p) {
  const auto n = static_cast<Eigen::Index>(sd.dimension);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < sd.distinct(); ++i)
    out += static_cast<double>(p(sd.eigenvalues[i])) * sd.projectors[i];
  return out;
}

/// Power-basis coefficients, constant term first.
inline Eigen::MatrixXd poly_apply(const SpectralDecomposition& sd,
                                  std::span<const double> coeffs) {
  return poly_apply(sd, [coeffs](double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  });
}

/// Column x of p(M), without forming the full matrix.
template <typename F>
  requires std::invocable<F&, double>
Eigen::VectorXd poly_apply_column(const SpectralDecomposition& sd, F&& p,
                                  std::size_t x) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(sd.dimension));
  for (std::size_t i = 0; i < sd.distinct(); ++i)
    out += static_cast<double>(p(sd.eigenvalues[i])) *
           sd.projectors[i].col(static_cast<Eigen::Index>(x));
  return out;
}

/// Eigenvalue support of e_x: eigenvalues whose projector column x has
/// norm above tol. Same order as sd.eigenvalues.
inline std::vector<double> support(const SpectralDecomposition& sd, std::size_t x,
                                   double tol = kDefaultSupportTol) {
  if (x >= sd.dimension)
    throw std::out_of_range("vertex " + std::to_string(x) + " out of range");
  std::vector<double> out;
  for (std::size_t i = 0; i < sd.distinct(); ++i)
    if (sd.projectors[i].col(static_cast<Eigen::Index>(x)).norm() > tol)
      out.push_back(sd.eigenvalues[i]);
  return out;
}

}  // namespace gwalk
