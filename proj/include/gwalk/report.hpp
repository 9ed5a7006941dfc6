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

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gwalk/multipartite.hpp"
#include "gwalk/pst.hpp"

// JSON renderings of engine results. ordered_json keeps keys in insertion
// order so output is byte-stable.

namespace gwalk {

using Json = nlohmann::ordered_json;

inline std::string rational_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1)
    os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

inline Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json to_json(const TransferReport& r, const Graph& g) {
  Json j;
  j["source"] = r.source;
  j["source_label"] = g.label(r.source);
  j["target"] = r.target;
  j["target_label"] = g.label(r.target);
  j["tau"] = r.tau;
  j["amplitude"] = to_json(r.amplitude);
  j["phase"] = r.phase ? to_json(*r.phase) : Json(nullptr);
  j["pst"] = r.pst;
  j["trivial"] = r.trivial;
  j["method"] = std::string(to_string(r.method));
  return j;
}

inline Json to_json(const ScanResult& s, const Graph& g) {
  Json hits = Json::array();
  for (const auto& h : s.hits) hits.push_back(to_json(h, g));
  Json j;
  j["source"] = s.source;
  j["source_label"] = g.label(s.source);
  j["tau_max"] = s.tau_max;
  j["evaluated"] = s.evaluated;
  j["pruned"] = s.pruned;
  j["hits"] = std::move(hits);
  return j;
}

inline Json to_json(const PeriodReport& p) {
  Json j;
  j["period"] = p.period ? Json(*p.period) : Json(nullptr);
  j["status"] = p.period ? "periodic" : "none up to bound";
  j["bound"] = p.bound;
  j["residual"] = p.period ? Json(p.residual) : Json(nullptr);
  return j;
}

inline Json to_json(const TheoremTable& t) {
  const Graph dummy = complete_multipartite(t.r, 2);
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json hits = Json::array();
    const Graph g = complete_multipartite(t.r, row.m);
    for (const auto& h : row.hits) hits.push_back(to_json(h, g));
    Json jr;
    jr["family"] = t.family;
    jr["m"] = row.m;
    jr["tau"] = Json{{"min", 1}, {"max", t.tau_max}};
    jr["expected"] = row.expected_tau
                         ? Json{{"target", row.expected_target},
                                {"target_label", dummy.label(row.expected_target)},
                                {"tau", *row.expected_tau}}
                         : Json(nullptr);
    jr["hits"] = std::move(hits);
    jr["pruned"] = row.pruned;
    jr["closed_form_gap"] = row.closed_form_gap;
    jr["verdict"] = row.pass ? "pass" : "fail";
    rows.push_back(std::move(jr));
  }
  Json j;
  j["family"] = t.family;
  j["r"] = t.r;
  j["rows"] = std::move(rows);
  j["verdict"] = t.pass ? "pass" : "fail";
  return j;
}

struct PaperVerification {
  Json report;
  bool pass = false;
};

/**
 * Full classification battery for equal-part complete multipartite graphs:
 * rational eigenvalue bound on r, the target overlap formula, both
 * classification scans, complete graphs, and periods.
 */
inline PaperVerification verify_paper(const PstOptions& opt = {}) {
  PaperVerification out;
  bool pass = true;
  Json& rep = out.report;

  Json rbound = Json::array();
  for (std::size_t r = 2; r <= 8; ++r) {
    const bool got = r_bound_check(r, 2);
    const bool want = r == 2 || r == 3;
    pass = pass && got == want;
    rbound.push_back(Json{{"r", r},
                          {"eigenvalue", rational_string(Rational(-1, static_cast<long>(r - 1)))},
                          {"admissible", got},
                          {"verdict", got == want ? "pass" : "fail"}});
  }
  rep["r_bound"] = std::move(rbound);

  Json lemma = Json::array();
  for (std::size_t r = 2; r <= 3; ++r) {
    for (std::size_t m = 1; m <= 5; ++m) {
      const TargetLemmaResult t = target_lemma_check(r, m);
      const bool ok = (m == 2) ? t.target() == Vertex{1} : !t.target().has_value();
      pass = pass && ok;
      lemma.push_back(Json{{"r", r},
                           {"m", m},
                           {"max_overlap", rational_string(t.value)},
                           {"argmax", t.vertex},
                           {"maximizers", t.maximizers},
                           {"target", t.target() ? Json(*t.target()) : Json(nullptr)},
                           {"verdict", ok ? "pass" : "fail"}});
    }
  }
  rep["target_lemma"] = std::move(lemma);

  const TheoremTable bip = verify_bipartite_theorem(5, opt);
  const TheoremTable tri = verify_tripartite_theorem(4, opt);
  pass = pass && bip.pass && tri.pass;
  rep["bipartite"] = to_json(bip);
  rep["tripartite"] = to_json(tri);

  const CompleteGraphCheck cg = verify_complete_graphs();
  pass = pass && cg.pass;
  rep["complete_graphs"] = Json{{"k2_arc_swap", cg.k2_arc_swap},
                                {"k3_distinct_hits", cg.k3_distinct_hits},
                                {"verdict", cg.pass ? "pass" : "fail"}};

  struct PeriodCase {
    std::string name;
    Graph graph;
    std::size_t expected;
  };
  std::vector<PeriodCase> cases;
  for (std::size_t m = 2; m <= 4; ++m)
    cases.push_back({"multipartite:2," + std::to_string(m), complete_multipartite(2, m), 4});
  for (std::size_t m = 2; m <= 3; ++m)
    cases.push_back({"multipartite:3," + std::to_string(m), complete_multipartite(3, m), 12});
  cases.push_back({"complete:3", complete(3), 3});
  Json periods = Json::array();
  for (const auto& c : cases) {
    const PeriodReport p = find_period(build(c.graph));
    const bool ok = p.period == c.expected;
    pass = pass && ok;
    Json jp = to_json(p);
    jp["graph"] = c.name;
    jp["expected"] = c.expected;
    jp["verdict"] = ok ? "pass" : "fail";
    periods.push_back(std::move(jp));
  }
  rep["periods"] = std::move(periods);
  rep["verdict"] = pass ? "pass" : "fail";
  out.pass = pass;
  return out;
}

}  // namespace gwalk
