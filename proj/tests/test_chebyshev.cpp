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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "gwalk/chebyshev.hpp"
#include "gwalk/corpus.hpp"
#include "gwalk/walk.hpp"
#include "oracles.hpp"

using namespace gwalk;
using oracle::max_abs;

TEST_CASE("scalar Chebyshev values", "[chebyshev]") {
  CHECK(cheb_scalar(0, 0.37) == 1.0);
  CHECK(cheb_scalar(1, 0.37) == 0.37);
  CHECK(cheb_scalar(2, 0.0) == -1.0);
  // theta = 2pi/3: cos(6 theta) = 1.
  CHECK(oracle::cheb_cos(6, -0.5) == Catch::Approx(1.0).margin(1e-12));
  CHECK(cheb_scalar(6, -0.5) == Catch::Approx(1.0).margin(1e-12));
  CHECK(cheb_scalar(3, 2.0) == Catch::Approx(26.0));  // 4*8 - 3*2
}

TEST_CASE("cos form T_n(cos t) = cos(n t)", "[chebyshev][property]") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  for (int trial = 0; trial < 1000; ++trial) {
    const double theta = angle(rng);
    const double x = std::cos(theta);
    for (std::size_t n = 0; n <= 200; ++n) {
      const double t = cheb_scalar(n, x);
      REQUIRE(std::abs(t - std::cos(static_cast<double>(n) * theta)) <= 1e-10);
      REQUIRE(std::abs(t) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("semigroup T_m(T_n(x)) = T_mn(x)", "[chebyshev][property]") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = unit(rng);
    for (std::size_t m = 0; m <= 8; ++m)
      for (std::size_t n = 0; n <= 8; ++n)
        REQUIRE(std::abs(cheb_scalar(m, cheb_scalar(n, x)) - cheb_scalar(m * n, x)) <= 1e-10);
  }
}

TEST_CASE("exact rational Chebyshev values", "[chebyshev]") {
  CHECK(cheb_rational(2, Rational(0)) == Rational(-1));
  CHECK(cheb_rational(3, Rational(-1, 2)) == Rational(1));
  CHECK(cheb_rational(0, Rational(3, 7)) == Rational(1));
  CHECK(cheb_rational(1, Rational(3, 7)) == Rational(3, 7));
  for (std::size_t tau : {0u, 1u, 2u, 17u, 400u}) CHECK(cheb_rational(tau, Rational(1)) == 1);
  // 2x^2 - 1 at 1/3 is -7/9, already reduced.
  CHECK(cheb_rational(2, Rational(1, 3)) == Rational(-7, 9));
  // Reduction: T_2(1/2) = -1/2.
  CHECK(cheb_rational(2, Rational(1, 2)) == Rational(-1, 2));
}

TEST_CASE("exact and floating Chebyshev agree", "[chebyshev][property]") {
  for (long q = 1; q <= 10; ++q) {
    for (long p = -q; p <= q; ++p) {
      const Rational x(p, q);
      const double xd = static_cast<double>(p) / static_cast<double>(q);
      ChebyshevRationalSequence seq(x);
      for (std::size_t n = 0; n <= 50; ++n) {
        if (n > 0) seq.advance();
        REQUIRE(seq.value() == cheb_rational(n, x));
        REQUIRE(std::abs(seq.value().convert_to<double>() - cheb_scalar(n, xd)) <= 1e-12);
      }
    }
  }
  // Large degree stays exact: compare against the cos form.
  const Rational third(1, 3);
  CHECK(cheb_rational(1000, third).convert_to<double>() ==
        Catch::Approx(oracle::cheb_cos(1000, 1.0 / 3.0)).margin(1e-9));
}

TEST_CASE("matrix Chebyshev: spectral and recurrence routes agree", "[chebyshev][property]") {
  for (const Graph& g : connected_graph_corpus(6)) {
    const Eigen::MatrixXd p = build(g).discriminant();
    const SpectralDecomposition sd = decompose(p);
    const auto n = static_cast<Eigen::Index>(g.order());
    REQUIRE(max_abs(cheb_matrix(sd, 0) - Eigen::MatrixXd::Identity(n, n)) <= 1e-9);
    REQUIRE(max_abs(cheb_matrix(sd, 1) - p) <= 1e-9);
    for (std::size_t tau = 0; tau <= 24; ++tau)
      REQUIRE(max_abs(cheb_matrix(sd, tau) - cheb_matrix_recurrence(p, tau)) <= 1e-9);
  }
}

TEST_CASE("rational PST filter", "[chebyshev]") {
  CHECK(rational_pst_filter(Rational(-1, 2)));
  CHECK_FALSE(rational_pst_filter(Rational(-1, 3)));
  CHECK(rational_pst_filter(Rational(1)));
  CHECK(rational_pst_filter(Rational(0)));
  CHECK(rational_pst_filter(Rational(-1)));
  CHECK(rational_pst_filter(Rational(1, 2)));
  CHECK_FALSE(rational_pst_filter(Rational(2, 3)));
  CHECK_THROWS_AS(rational_pst_filter(Rational(3, 2)), std::domain_error);
}
