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

#include "gwalk/multipartite.hpp"
#include "oracles.hpp"

using namespace gwalk;
using oracle::max_abs;

namespace {

Eigen::MatrixXd i_kron_f1_minus_f2(std::size_t r, std::size_t m) {
  const Eigen::MatrixXd f1 = Eigen::MatrixXd::Constant(m, m, 1.0 / static_cast<double>(m));
  const Eigen::MatrixXd f2 = Eigen::MatrixXd::Identity(m, m) - f1;
  return oracle::kron(Eigen::MatrixXd::Identity(r, r), f1 - f2);
}

}  // namespace

TEST_CASE("closed-form spectra", "[multipartite]") {
  SECTION("(3, 2)") {
    const auto s = closed_form_spectral(3, 2);
    CHECK(s.eigenvalues[0] == Rational(1));
    CHECK(s.eigenvalues[1] == Rational(-1, 2));
    CHECK(s.eigenvalues[2] == Rational(0));
  }
  SECTION("(2, m)") {
    for (std::size_t m = 1; m <= 4; ++m)
      CHECK(closed_form_spectral(2, m).eigenvalues[1] == Rational(-1));
    const auto sd = closed_form_spectral(2, 3).to_decomposition();
    REQUIRE(sd.distinct() == 3);
    CHECK(sd.eigenvalues == std::vector<double>{1.0, 0.0, -1.0});
  }
  SECTION("(4, 1): the zero eigenspace vanishes") {
    const auto s = closed_form_spectral(4, 1);
    CHECK(s.f2.is_zero());
    const auto sd = s.to_decomposition();
    REQUIRE(sd.distinct() == 2);
    CHECK(sd.eigenvalues[0] == 1.0);
    CHECK(sd.eigenvalues[1] == Catch::Approx(-1.0 / 3.0));
  }
  SECTION("projectors are exact") {
    const auto s = closed_form_spectral(3, 3);
    const auto proj = s.projectors();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        // exact idempotence / orthogonality, checked entrywise in rationals
        const auto& a = proj[i];
        const auto& b = proj[j];
        RationalMatrix prod(a.rows(), b.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t c = 0; c < b.cols(); ++c)
            for (std::size_t k = 0; k < a.cols(); ++k) prod(r, c) += a(r, k) * b(k, c);
        if (i == j)
          CHECK(prod == a);
        else
          CHECK(prod.is_zero());
      }
    }
    CHECK(proj[0] + proj[1] + proj[2] == RationalMatrix::identity(9));
  }
  SECTION("errors") {
    CHECK_THROWS_AS(closed_form_spectral(1, 2), GraphError);
    CHECK_THROWS_AS(closed_form_spectral(2, 0), GraphError);
  }
}

TEST_CASE("closed form matches the walk discriminant and the numeric route",
          "[multipartite][property]") {
  for (std::size_t r = 2; r <= 5; ++r) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto s = closed_form_spectral(r, m);
      const WalkOperators w = build(complete_multipartite(r, m));
      REQUIRE(max_abs(s.discriminant().to_double() - w.discriminant()) <= 1e-12);
      const auto closed = s.to_decomposition();
      const auto numeric = decompose(w.discriminant());
      REQUIRE(decomposition_gap(closed, numeric) <= 1e-9);
      // Every vertex supports the whole spectrum.
      for (Vertex x = 0; x < r * m; ++x) REQUIRE(support(closed, x).size() == closed.distinct());
    }
  }
}

TEST_CASE("T_2 and T_6 collapse onto I kron (F1 - F2)", "[multipartite]") {
  for (std::size_t m = 1; m <= 4; ++m) {
    const Eigen::MatrixXd want = i_kron_f1_minus_f2(2, m);
    CHECK(max_abs(cheb_matrix(closed_form_spectral(2, m).to_decomposition(), 2) - want) <= 1e-10);
    const Eigen::MatrixXd p2 = build(complete_multipartite(2, m)).discriminant();
    CHECK(max_abs(cheb_matrix_recurrence(p2, 2) - want) <= 1e-10);
  }
  for (std::size_t m = 1; m <= 4; ++m) {
    const Eigen::MatrixXd want = i_kron_f1_minus_f2(3, m);
    CHECK(max_abs(cheb_matrix(closed_form_spectral(3, m).to_decomposition(), 6) - want) <= 1e-10);
    const Eigen::MatrixXd p3 = build(complete_multipartite(3, m)).discriminant();
    CHECK(max_abs(cheb_matrix_recurrence(p3, 6) - want) <= 1e-10);
  }
}

TEST_CASE("r bound", "[multipartite]") {
  CHECK(r_bound_check(2, 3));
  CHECK(r_bound_check(3, 3));
  for (std::size_t r = 4; r <= 12; ++r) CHECK_FALSE(r_bound_check(r, 2));
}

TEST_CASE("target lemma", "[multipartite]") {
  SECTION("m = 2 hits v_2^(1)") {
    for (std::size_t r : {2u, 3u}) {
      const auto t = target_lemma_check(r, 2);
      CHECK(t.attains_one);
      CHECK(t.vertex == 1);
      CHECK(t.maximizers == 1);
      CHECK(t.target() == Vertex{1});
    }
  }
  SECTION("m = 3 peaks at 2/3") {
    const auto t = target_lemma_check(2, 3);
    CHECK(t.value == Rational(2, 3));
    CHECK_FALSE(t.attains_one);
    CHECK(t.maximizers == 2);
    CHECK_FALSE(t.target().has_value());
  }
  SECTION("m = 1 only reaches the source itself") {
    const auto t = target_lemma_check(3, 1);
    CHECK(t.value == Rational(1));
    CHECK(t.is_source);
    CHECK_FALSE(t.target().has_value());
  }
  SECTION("formula agrees with the matrix overlap") {
    for (std::size_t r : {2u, 3u})
      for (std::size_t m = 1; m <= 5; ++m) {
        const auto t = target_lemma_check(r, m);
        const Eigen::VectorXd col = i_kron_f1_minus_f2(r, m).col(0).cwiseAbs();
        Eigen::Index arg = 0;
        const double best = col.maxCoeff(&arg);
        CHECK(best == Catch::Approx(t.value.convert_to<double>()));
        CHECK(static_cast<Vertex>(arg) == t.vertex);
      }
  }
  CHECK_THROWS_AS(target_lemma_check(4, 2), GraphError);
}

TEST_CASE("classification tables", "[multipartite]") {
  const TheoremTable bip = verify_bipartite_theorem(4);
  CHECK(bip.pass);
  REQUIRE(bip.rows.size() == 3);
  CHECK(bip.rows[0].hits.size() == 1);
  const TheoremTable tri = verify_tripartite_theorem(3);
  CHECK(tri.pass);
  REQUIRE(tri.rows.size() == 2);
  CHECK(tri.rows[0].hits.at(0).tau == 6);
  CHECK_THROWS_AS(verify_bipartite_theorem(1), GraphError);

  const CompleteGraphCheck cg = verify_complete_graphs();
  CHECK(cg.k2_arc_swap);
  CHECK(cg.k3_distinct_hits == 0);
  CHECK(cg.pass);
}

TEST_CASE("scans from any source mirror the scan from v_1^(1)", "[multipartite][property]") {
  for (std::size_t r : {2u, 3u}) {
    const std::size_t tau_max = r == 2 ? 3 : 11;
    for (std::size_t m = 1; m <= 3; ++m) {
      const MultipartiteSpec spec{r, m};
      const WalkOperators w = build(complete_multipartite(r, m));
      const auto sd = closed_form_spectral(r, m).to_decomposition();
      const ScanResult base = scan_pst(w, sd, 0, tau_max);
      for (Vertex x = 1; x < spec.order(); ++x) {
        const ScanResult s = scan_pst(w, sd, x, tau_max);
        REQUIRE(s.hits.size() == base.hits.size());
        REQUIRE(s.pruned == base.pruned);
        for (std::size_t k = 0; k < s.hits.size(); ++k) {
          // The automorphism taking v_1^(1) to x keeps "same part" and
          // "same vertex" relations.
          REQUIRE(s.hits[k].tau == base.hits[k].tau);
          REQUIRE((spec.part_of(s.hits[k].target) == spec.part_of(x)) ==
                  (spec.part_of(base.hits[k].target) == 0));
          REQUIRE(std::abs(s.hits[k].amplitude - base.hits[k].amplitude) <= 1e-10);
        }
      }
    }
  }
}
