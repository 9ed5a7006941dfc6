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

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gwalk/chebyshev.hpp"
#include "gwalk/graph.hpp"
#include "gwalk/pst.hpp"
#include "gwalk/spectral.hpp"
#include "gwalk/walk.hpp"

namespace gwalk {

/// Dense row-major matrix of exact rationals. Only what the closed-form
/// projectors need.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RationalMatrix ones(std::size_t n) {
    RationalMatrix m(n, n);
    for (auto& v : m.data_) v = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  /// Kronecker product: (a (x) b)(i*rb + k, j*cb + l) = a(i, j) * b(k, l).
  friend RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const Rational& s = a(i, j);
        if (s == 0) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            out(i * b.rows_ + k, j * b.cols_ + l) = s * b(k, l);
      }
    return out;
  }

  Eigen::MatrixXd to_double() const {
    Eigen::MatrixXd m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            (*this)(i, j).convert_to<double>();
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/**
 * Closed-form spectral data of the discriminant of the complete r-partite
 * graph with parts of size m:
 *
 *   P = 1 (E1 (x) F1) + (-1/(r-1)) (E2 (x) F1) + 0 (I (x) F2)
 *
 * with E1 = J_r/r, E2 = I_r - J_r/r, F1 = J_m/m, F2 = I_m - J_m/m.
 */
struct MultipartiteSpectral {
  std::size_t r = 0;
  std::size_t m = 0;
  std::array<Rational, 3> eigenvalues;  // 1, -1/(r-1), 0
  RationalMatrix e1, e2, f1, f2;

  std::array<RationalMatrix, 3> projectors() const {
    return {kron(e1, f1), kron(e2, f1), kron(RationalMatrix::identity(r), f2)};
  }

  RationalMatrix discriminant() const {
    auto proj = projectors();
    RationalMatrix p(r * m, r * m);
    for (std::size_t k = 0; k < 3; ++k) p = p + eigenvalues[k] * proj[k];
    return p;
  }

  /// Numeric decomposition in decreasing eigenvalue order, with rank-zero
  /// projectors dropped (F2 vanishes when m = 1).
  SpectralDecomposition to_decomposition() const {
    auto proj = projectors();
    // decreasing: 1 > 0 > -1/(r-1)
    constexpr std::array<std::size_t, 3> order{0, 2, 1};
    SpectralDecomposition sd;
    sd.dimension = r * m;
    for (std::size_t k : order) {
      if (proj[k].is_zero()) continue;
      sd.eigenvalues.push_back(eigenvalues[k].convert_to<double>());
      sd.projectors.push_back(proj[k].to_double());
    }
    return sd;
  }
};

inline MultipartiteSpectral closed_form_spectral(std::size_t r, std::size_t m) {
  if (r < 2) throw GraphError("multipartite spectrum needs r >= 2");
  if (m < 1) throw GraphError("multipartite spectrum needs m >= 1");
  MultipartiteSpectral s;
  s.r = r;
  s.m = m;
  s.eigenvalues = {Rational(1), Rational(-1, static_cast<long>(r - 1)), Rational(0)};
  const Rational inv_r(1, static_cast<long>(r));
  const Rational inv_m(1, static_cast<long>(m));
  s.e1 = inv_r * RationalMatrix::ones(r);
  s.e2 = RationalMatrix::identity(r) - s.e1;
  s.f1 = inv_m * RationalMatrix::ones(m);
  s.f2 = RationalMatrix::identity(m) - s.f1;
  return s;
}

/// False certifies that no vertex-type PST exists on the graph: its
/// rational eigenvalue -1/(r-1) lies in every vertex support.
inline bool r_bound_check(std::size_t r, std::size_t /*m*/) {
  if (r < 2) throw GraphError("r_bound_check needs r >= 2");
  return rational_pst_filter(Rational(-1, static_cast<long>(r - 1)));
}

struct TargetLemmaResult {
  Vertex vertex = 0;           // first maximizer in index order
  Rational value;              // |<(I (x) (F1 - F2)) e_source, e_vertex>|
  std::size_t maximizers = 0;  // how many vertices attain the maximum
  bool attains_one = false;
  bool is_source = false;      // maximizer is v_1^(1) itself

  /// The PST target, when the maximum 1 is attained at another vertex.
  std::optional<Vertex> target() const {
    if (attains_one && !is_source && maximizers == 1) return vertex;
    return std::nullopt;
  }
};

/**
 * Evaluates |delta_{1,j} (2/m - delta_{1,i})| for every vertex v_i^(j),
 * i.e. the overlap of (I (x) (F1 - F2)) e_{v_1^(1)} with e_{v_i^(j)}.
 */
inline TargetLemmaResult target_lemma_check(std::size_t r, std::size_t m) {
  if (r != 2 && r != 3) throw GraphError("target_lemma_check needs r in {2, 3}");
  if (m < 1) throw GraphError("target_lemma_check needs m >= 1");
  const MultipartiteSpec spec{r, m};
  const Rational two_over_m(2, static_cast<long>(m));
  TargetLemmaResult res;
  res.value = -1;
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      const Rational v =
          j == 0 ? abs(two_over_m - Rational(i == 0 ? 1 : 0)) : Rational(0);
      if (v > res.value) {
        res.value = v;
        res.vertex = spec.vertex(j, i);
        res.maximizers = 1;
      } else if (v == res.value) {
        ++res.maximizers;
      }
    }
  }
  res.attains_one = res.value == 1;
  res.is_source = res.vertex == 0;
  return res;
}

// ---------------------------------------------------------------------------
// Classification checks

struct TheoremRow {
  std::size_t m = 0;
  std::vector<TransferReport> hits;
  std::size_t pruned = 0;
  std::optional<std::size_t> expected_tau;  // set for the m = 2 row
  Vertex expected_target = 1;
  double closed_form_gap = 0.0;  // projector-wise max-norm vs numeric route
  bool pass = false;
};

struct TheoremTable {
  std::string family;
  std::size_t r = 0;
  std::size_t tau_max = 0;
  std::vector<TheoremRow> rows;
  bool pass = false;
};

/// Max-norm distance between two decompositions, projector by projector.
/// Infinity when the distinct eigenvalue counts differ.
inline double decomposition_gap(const SpectralDecomposition& a,
                                const SpectralDecomposition& b) {
  if (a.distinct() != b.distinct() || a.dimension != b.dimension)
    return std::numeric_limits<double>::infinity();
  double gap = 0.0;
  for (std::size_t i = 0; i < a.distinct(); ++i) {
    gap = std::max(gap, std::abs(a.eigenvalues[i] - b.eigenvalues[i]));
    gap = std::max(gap, (a.projectors[i] - b.projectors[i]).cwiseAbs().maxCoeff());
  }
  return gap;
}

namespace detail {

inline TheoremTable verify_family(std::string family, std::size_t r, std::size_t tau_max,
                                  std::size_t expected_tau, std::size_t m_max,
                                  const PstOptions& opt) {
  if (m_max < 2) throw GraphError("m_max must be at least 2");
  TheoremTable table;
  table.family = std::move(family);
  table.r = r;
  table.tau_max = tau_max;
  table.pass = true;
  for (std::size_t m = 2; m <= m_max; ++m) {
    const Graph g = complete_multipartite(r, m);
    const WalkOperators w = build(g);
    const SpectralDecomposition sd = closed_form_spectral(r, m).to_decomposition();
    const ScanResult scan = scan_pst(w, sd, 0, tau_max, opt);

    TheoremRow row;
    row.m = m;
    row.hits = scan.hits;
    row.pruned = scan.pruned;
    row.closed_form_gap = decomposition_gap(sd, decompose(w.discriminant()));
    if (m == 2) {
      row.expected_tau = expected_tau;
      row.pass = row.hits.size() == 1 && row.hits[0].tau == expected_tau &&
                 row.hits[0].target == row.expected_target;
    } else {
      row.pass = row.hits.empty();
    }
    row.pass = row.pass && row.closed_form_gap <= 1e-9;
    table.pass = table.pass && row.pass;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace detail

/// Scan from v_1^(1) over tau = 1..3 on K_{m,m}, m = 2..m_max. Passes iff
/// the only hit is (v_2^(1), tau = 2) at m = 2.
inline TheoremTable verify_bipartite_theorem(std::size_t m_max, const PstOptions& opt = {}) {
  return detail::verify_family("bipartite", 2, 3, 2, m_max, opt);
}

/// Scan from v_1^(1) over tau = 1..11 on K_{m,m,m}, m = 2..m_max. Passes iff
/// the only hit is (v_2^(1), tau = 6) at m = 2.
inline TheoremTable verify_tripartite_theorem(std::size_t m_max, const PstOptions& opt = {}) {
  return detail::verify_family("tripartite", 3, 11, 6, m_max, opt);
}

struct CompleteGraphCheck {
  bool k2_arc_swap = false;         // U e_a = e_{a^-1} on K_2
  std::size_t k3_distinct_hits = 0; // PST between distinct vertices, tau in 1..3
  bool pass = false;
};

inline CompleteGraphCheck verify_complete_graphs() {
  CompleteGraphCheck c;
  const WalkOperators k2 = build(complete(2));
  c.k2_arc_swap = true;
  for (std::size_t a = 0; a < k2.arc_count(); ++a) {
    const ArcState out = k2.apply(arc_state(k2, a));
    const ArcState want = arc_state(k2, k2.arcs()[a].inverse);
    c.k2_arc_swap = c.k2_arc_swap && out.amplitudes() == want.amplitudes();
  }
  const WalkOperators k3 = build(complete(3));
  const SpectralDecomposition sd = closed_form_spectral(3, 1).to_decomposition();
  for (Vertex x = 0; x < 3; ++x)
    c.k3_distinct_hits += scan_pst(k3, sd, x, 3).hits.size();
  c.pass = c.k2_arc_swap && c.k3_distinct_hits == 0;
  return c;
}

}  // namespace gwalk
