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
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "gwalk/graph.hpp"

namespace gwalk {

using Complex = std::complex<double>;

/// Complex amplitude vector indexed by arcs.
class ArcState {
 public:
  ArcState() = default;
  explicit ArcState(std::size_t arcs) : amp_(Eigen::VectorXcd::Zero(arcs)) {}
  explicit ArcState(Eigen::VectorXcd amp) : amp_(std::move(amp)) {}

  std::size_t size() const { return static_cast<std::size_t>(amp_.size()); }
  Complex operator[](std::size_t a) const { return amp_(a); }
  Complex& operator[](std::size_t a) { return amp_(a); }
  const Eigen::VectorXcd& amplitudes() const { return amp_; }

  double norm() const { return amp_.norm(); }
  bool is_state(double tol = 1e-9) const {
    return std::abs(norm() - 1.0) <= tol;
  }

  /// <this, other>, conjugate-linear in the second argument.
  Complex inner(const ArcState& other) const {
    return other.amp_.dot(amp_);
  }

 private:
  Eigen::VectorXcd amp_;
};

/**
 * Grover-walk matrices of a graph.
 *
 * boundary (d):      V x A, d(x, a) = [x == t(a)] / sqrt(deg x)
 * shift (S):         A x A permutation, S(a, b) = [a == b^-1]
 * discriminant (P):  V x V, P = d S d^T
 *
 * The time evolution U = S (2 d^T d - I) is applied through the arc
 * structure; time_evolution() materializes it densely for checks.
 */
class WalkOperators {
 public:
  WalkOperators(Graph g, ArcSet arcs) : graph_(std::move(g)), arcs_(std::move(arcs)) {
    const auto nv = graph_.order();
    const auto na = arcs_.size();
    inv_sqrt_deg_.resize(nv);
    for (Vertex x = 0; x < nv; ++x)
      inv_sqrt_deg_[x] = 1.0 / std::sqrt(static_cast<double>(graph_.degree(x)));

    d_ = Eigen::MatrixXd::Zero(nv, na);
    s_ = Eigen::MatrixXd::Zero(na, na);
    for (std::size_t a = 0; a < na; ++a) {
      d_(arcs_[a].terminus, a) = inv_sqrt_deg_[arcs_[a].terminus];
      s_(a, arcs_[a].inverse) = 1.0;
    }
    p_ = d_ * s_ * d_.transpose();
  }

  const Graph& graph() const { return graph_; }
  const ArcSet& arcs() const { return arcs_; }
  std::size_t vertex_count() const { return graph_.order(); }
  std::size_t arc_count() const { return arcs_.size(); }

  const Eigen::MatrixXd& boundary() const { return d_; }
  const Eigen::MatrixXd& shift() const { return s_; }
  const Eigen::MatrixXd& discriminant() const { return p_; }

  /// 2 d^T d - I
  Eigen::MatrixXd coin() const {
    const auto na = static_cast<Eigen::Index>(arc_count());
    return 2.0 * d_.transpose() * d_ - Eigen::MatrixXd::Identity(na, na);
  }

  Eigen::MatrixXd time_evolution() const { return s_ * coin(); }

  /// U psi using the arc structure: reflect about the mean of the incoming
  /// amplitudes at each terminus, then send every arc to its inverse.
  ArcState apply(const ArcState& psi) const {
    check_size(psi);
    const auto nv = vertex_count();
    Eigen::VectorXcd mean = Eigen::VectorXcd::Zero(nv);
    for (std::size_t a = 0; a < arc_count(); ++a)
      mean(arcs_[a].terminus) += psi[a];
    for (Vertex x = 0; x < nv; ++x)
      mean(x) /= static_cast<double>(graph_.degree(x));

    ArcState out(arc_count());
    for (std::size_t a = 0; a < arc_count(); ++a) {
      const std::size_t b = arcs_[a].inverse;
      out[a] = 2.0 * mean(arcs_[b].terminus) - psi[b];
    }
    return out;
  }

  ArcState apply_dense(const ArcState& psi) const {
    check_size(psi);
    return ArcState(time_evolution().cast<Complex>() * psi.amplitudes());
  }

  /// d psi: vertex-space image of an arc state.
  Eigen::VectorXcd to_vertices(const ArcState& psi) const {
    check_size(psi);
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(vertex_count());
    for (std::size_t a = 0; a < arc_count(); ++a) {
      const Vertex t = arcs_[a].terminus;
      out(t) += inv_sqrt_deg_[t] * psi[a];
    }
    return out;
  }

  double inv_sqrt_degree(Vertex x) const { return inv_sqrt_deg_.at(x); }

 private:
  void check_size(const ArcState& psi) const {
    if (psi.size() != arc_count())
      throw std::invalid_argument("arc state has " + std::to_string(psi.size()) +
                                  " entries, walk has " +
                                  std::to_string(arc_count()) + " arcs");
  }

  Graph graph_;
  ArcSet arcs_;
  std::vector<double> inv_sqrt_deg_;
  Eigen::MatrixXd d_;
  Eigen::MatrixXd s_;
  Eigen::MatrixXd p_;
};

inline WalkOperators build(const Graph& g, const ArcSet& arcs) {
  return WalkOperators(g, arcs);
}

inline WalkOperators build(const Graph& g) { return WalkOperators(g, ArcSet(g)); }

/// d^T e_x: weight 1/sqrt(deg x) on every arc entering x.
inline ArcState vertex_state(const WalkOperators& w, Vertex x) {
  if (x >= w.vertex_count())
    throw std::out_of_range("vertex " + std::to_string(x) + " out of range");
  ArcState s(w.arc_count());
  for (std::size_t a : w.arcs().incoming(x)) s[a] = w.inv_sqrt_degree(x);
  return s;
}

inline ArcState arc_state(const WalkOperators& w, std::size_t a) {
  if (a >= w.arc_count())
    throw std::out_of_range("arc " + std::to_string(a) + " out of range");
  ArcState s(w.arc_count());
  s[a] = 1.0;
  return s;
}

/// U^t s by t successive applications.
inline ArcState step(const WalkOperators& w, ArcState s, long t) {
  if (t < 0) throw std::invalid_argument("step count must be nonnegative");
  for (long k = 0; k < t; ++k) s = w.apply(s);
  return s;
}

}  // namespace gwalk
