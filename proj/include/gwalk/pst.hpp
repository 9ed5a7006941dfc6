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

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "gwalk/chebyshev.hpp"
#include "gwalk/spectral.hpp"
#include "gwalk/walk.hpp"

namespace gwalk {

inline constexpr double kDefaultPstTol = 1e-9;
inline constexpr double kDefaultConditionTol = 1e-6;
inline constexpr double kMethodAgreementTol = 1e-9;
inline constexpr std::size_t kDirectCheckMaxArcs = 256;
inline constexpr std::size_t kDefaultPeriodBound = 720;

enum class Method { DirectU, Chebyshev, Both };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::DirectU: return "direct-U";
    case Method::Chebyshev: return "chebyshev";
    case Method::Both: return "both";
  }
  return "unknown";
}

/// Thrown when direct stepping and the Chebyshev route disagree.
class MethodDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct TransferReport {
  Vertex source = 0;
  Vertex target = 0;
  std::size_t tau = 0;
  Complex amplitude;
  std::optional<Complex> phase;  // set iff pst
  bool pst = false;
  bool trivial = false;  // self-transfer
  Method method = Method::Chebyshev;
};

struct PeriodReport {
  std::optional<std::size_t> period;
  std::size_t bound = 0;
  double residual = 0.0;  // ||U^p - I||_max at the reported period
};

struct ScanResult {
  Vertex source = 0;
  std::size_t tau_max = 0;
  std::vector<TransferReport> hits;
  std::size_t pruned = 0;     // times rejected by the eigenvalue condition
  std::size_t evaluated = 0;  // times whose amplitudes were computed
};

struct PstOptions {
  double pst_tol = kDefaultPstTol;
  double condition_tol = kDefaultConditionTol;
  double support_tol = kDefaultSupportTol;
  double agreement_tol = kMethodAgreementTol;
  std::size_t direct_max_arcs = kDirectCheckMaxArcs;
  bool include_self = false;
  unsigned threads = 1;
};

/**
 * Column x of d U^tau d^T, i.e. the amplitudes <U^tau d^T e_x, d^T e_y>
 * for every y. Computed as T_tau(P) e_x from the spectral decomposition;
 * when the walk has at most direct_max_arcs arcs it is recomputed by
 * stepping U and the two routes must agree within agreement_tol.
 */
struct TransferColumn {
  Eigen::VectorXd amplitudes;
  Method method;
};

inline TransferColumn transfer_column(const WalkOperators& w,
                                      const SpectralDecomposition& sd, Vertex x,
                                      std::size_t tau,
                                      std::size_t direct_max_arcs = kDirectCheckMaxArcs,
                                      double agreement_tol = kMethodAgreementTol) {
  if (x >= w.vertex_count())
    throw std::out_of_range("vertex " + std::to_string(x) + " out of range");
  if (sd.dimension != w.vertex_count())
    throw std::invalid_argument("decomposition does not match the walk");
  TransferColumn col{
      poly_apply_column(sd, [tau](double l) { return cheb_scalar(tau, l); }, x),
      Method::Chebyshev};
  if (w.arc_count() <= direct_max_arcs) {
    const ArcState evolved = step(w, vertex_state(w, x), static_cast<long>(tau));
    const Eigen::VectorXcd direct = w.to_vertices(evolved);
    const double gap = (direct - col.amplitudes.cast<Complex>()).cwiseAbs().maxCoeff();
    if (!(gap <= agreement_tol)) {
      throw MethodDisagreement("d U^" + std::to_string(tau) +
                               " d^T and T(P) differ by " + std::to_string(gap) +
                               " at source " + std::to_string(x));
    }
    col.method = Method::Both;
  }
  return col;
}

inline Complex transfer_amplitude(const WalkOperators& w, const SpectralDecomposition& sd,
                                  Vertex x, Vertex y, std::size_t tau) {
  if (y >= w.vertex_count())
    throw std::out_of_range("vertex " + std::to_string(y) + " out of range");
  return transfer_column(w, sd, x, tau).amplitudes(static_cast<Eigen::Index>(y));
}

namespace detail {

inline TransferReport make_report(Vertex x, Vertex y, std::size_t tau, Complex amp,
                                  Method method, double pst_tol) {
  TransferReport r;
  r.source = x;
  r.target = y;
  r.tau = tau;
  r.amplitude = amp;
  r.method = method;
  r.pst = std::abs(amp) >= 1.0 - pst_tol;
  if (r.pst) r.phase = amp;
  r.trivial = x == y;
  return r;
}

}  // namespace detail

inline TransferReport detect_pst(const WalkOperators& w, const SpectralDecomposition& sd,
                                 Vertex x, Vertex y, std::size_t tau,
                                 double pst_tol = kDefaultPstTol) {
  if (y >= w.vertex_count())
    throw std::out_of_range("vertex " + std::to_string(y) + " out of range");
  const TransferColumn col = transfer_column(w, sd, x, tau);
  return detail::make_report(x, y, tau, col.amplitudes(static_cast<Eigen::Index>(y)),
                             col.method, pst_tol);
}

/// |T_tau(lambda)| >= 1 - tol on the whole support of e_x. A false result
/// rules out PST from d^T e_x at time tau to every target.
inline bool necessary_condition(const SpectralDecomposition& sd, Vertex x,
                                std::size_t tau, double tol = kDefaultConditionTol,
                                double support_tol = kDefaultSupportTol) {
  for (double lambda : support(sd, x, support_tol))
    if (std::abs(cheb_scalar(tau, lambda)) < 1.0 - tol) return false;
  return true;
}

/**
 * PST from d^T e_x over tau = 1..tau_max. Times failing the eigenvalue
 * condition are pruned without computing amplitudes. Hits are ordered by
 * (tau, target) regardless of the thread count.
 */
inline ScanResult scan_pst(const WalkOperators& w, const SpectralDecomposition& sd,
                           Vertex x, std::size_t tau_max, const PstOptions& opt = {}) {
  if (tau_max < 1) throw std::invalid_argument("tau_max must be at least 1");
  if (x >= w.vertex_count())
    throw std::out_of_range("vertex " + std::to_string(x) + " out of range");

  struct Cell {
    bool pruned = false;
    std::vector<TransferReport> hits;
  };
  std::vector<Cell> cells(tau_max);
  auto run = [&](std::size_t tau) {
    Cell& cell = cells[tau - 1];
    if (!necessary_condition(sd, x, tau, opt.condition_tol, opt.support_tol)) {
      cell.pruned = true;
      return;
    }
    const TransferColumn col =
        transfer_column(w, sd, x, tau, opt.direct_max_arcs, opt.agreement_tol);
    for (Vertex y = 0; y < w.vertex_count(); ++y) {
      if (y == x && !opt.include_self) continue;
      auto r = detail::make_report(x, y, tau, col.amplitudes(static_cast<Eigen::Index>(y)),
                                   col.method, opt.pst_tol);
      if (r.pst) cell.hits.push_back(r);
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, tau_max));
  if (threads == 1) {
    for (std::size_t tau = 1; tau <= tau_max; ++tau) run(tau);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (std::size_t tau = 1 + t; tau <= tau_max; tau += threads) run(tau);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  ScanResult out;
  out.source = x;
  out.tau_max = tau_max;
  for (auto& cell : cells) {
    if (cell.pruned) {
      ++out.pruned;
      continue;
    }
    ++out.evaluated;
    out.hits.insert(out.hits.end(), cell.hits.begin(), cell.hits.end());
  }
  return out;
}

/// Smallest p <= bound with ||U^p - I||_max <= tol.
inline PeriodReport find_period(const WalkOperators& w,
                                std::size_t bound = kDefaultPeriodBound,
                                double tol = 1e-9) {
  if (bound < 1) throw std::invalid_argument("period bound must be at least 1");
  const auto na = static_cast<Eigen::Index>(w.arc_count());
  std::vector<ArcState> columns;
  columns.reserve(w.arc_count());
  for (std::size_t a = 0; a < w.arc_count(); ++a) columns.push_back(arc_state(w, a));

  PeriodReport rep;
  rep.bound = bound;
  for (std::size_t p = 1; p <= bound; ++p) {
    double residual = 0.0;
    for (Eigen::Index a = 0; a < na; ++a) {
      auto& col = columns[static_cast<std::size_t>(a)];
      col = w.apply(col);
      for (Eigen::Index b = 0; b < na; ++b) {
        const Complex expect = (a == b) ? 1.0 : 0.0;
        residual = std::max(residual, std::abs(col[static_cast<std::size_t>(b)] - expect));
      }
    }
    if (residual <= tol) {
      rep.period = p;
      rep.residual = residual;
      return rep;
    }
  }
  return rep;
}

}  // namespace gwalk
