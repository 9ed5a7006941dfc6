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

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwalk/graph.hpp"
#include "gwalk/multipartite.hpp"
#include "gwalk/pst.hpp"
#include "gwalk/report.hpp"
#include "gwalk/spectral.hpp"
#include "gwalk/walk.hpp"

// Command layer behind the `walk` executable. Exit codes: 0 success,
// 1 verification mismatch, 2 usage or input error.

namespace gwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string command;
  std::optional<std::string> graph;  // family spec or edge-list path
  std::optional<std::string> x;
  std::optional<std::string> y;
  std::optional<std::size_t> arc;
  std::optional<std::size_t> tau;
  std::size_t tau_max = 24;
  std::size_t bound = kDefaultPeriodBound;
  std::size_t steps = 10;
  double pst_tol = kDefaultPstTol;
  double cluster_tol = kDefaultClusterTol;
  double support_tol = kDefaultSupportTol;
  double period_tol = 1e-9;
  Format format = Format::Json;
  unsigned threads = 1;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"simulate", "pst",     "scan",
                                              "period",   "support", "verify-paper"};
  return names;
}

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw UsageError("unknown format '" + s + "' (expected json, csv or text)");
}

struct LoadedGraph {
  std::string spec;
  Graph graph;
  std::optional<MultipartiteSpec> family;  // set for closed-form spectra
};

namespace detail {

inline std::vector<std::size_t> parse_args(const std::string& name, const std::string& args,
                                           std::size_t count) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= args.size()) {
    const std::size_t comma = std::min(args.find(',', pos), args.size());
    std::size_t v = 0;
    const char* first = args.data() + pos;
    const char* last = args.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
      throw UsageError("bad argument list '" + args + "' for family '" + name + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  if (out.size() != count)
    throw UsageError("family '" + name + "' takes " + std::to_string(count) + " argument(s)");
  return out;
}

}  // namespace detail

/// "multipartite:r,m", "cycle:n", "complete:n", or a path to an edge list.
inline LoadedGraph load_graph(const std::string& spec) {
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    const std::string name = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    if (name == "multipartite") {
      auto a = detail::parse_args(name, args, 2);
      return {spec, complete_multipartite(a[0], a[1]), MultipartiteSpec{a[0], a[1]}};
    }
    if (name == "complete") {
      auto a = detail::parse_args(name, args, 1);
      return {spec, complete(a[0]), MultipartiteSpec{a[0], 1}};
    }
    if (name == "cycle") {
      auto a = detail::parse_args(name, args, 1);
      return {spec, cycle(a[0]), std::nullopt};
    }
    throw UsageError("unknown graph family '" + name + "'");
  }
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot open edge list '" + spec + "'");
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return {spec, from_edge_list(text), std::nullopt};
}

inline Vertex resolve_vertex(const Graph& g, const std::string& token) {
  if (auto v = g.find_label(token)) return *v;
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || v >= g.order())
    throw UsageError("unknown vertex '" + token + "'");
  return v;
}

inline SpectralDecomposition decomposition_for(const LoadedGraph& lg, const WalkOperators& w,
                                               double cluster_tol) {
  if (lg.family) return closed_form_spectral(lg.family->r, lg.family->m).to_decomposition();
  return decompose(w.discriminant(), cluster_tol);
}

inline PstOptions pst_options(const RunConfig& cfg) {
  PstOptions opt;
  opt.pst_tol = cfg.pst_tol;
  opt.support_tol = cfg.support_tol;
  opt.threads = cfg.threads;
  return opt;
}

inline Json graph_json(const LoadedGraph& lg) {
  return Json{{"spec", lg.spec},
              {"vertices", lg.graph.order()},
              {"edges", lg.graph.size()},
              {"arcs", 2 * lg.graph.size()}};
}

inline std::string fmt_double(double v) {
  // Same shortest round-trip rendering the JSON writer uses.
  return Json(v).dump();
}

namespace detail {

template <typename T>
const T& require(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

inline void no_csv(const RunConfig& cfg) {
  if (cfg.format == Format::Csv)
    throw UsageError("csv output is only available for scan");
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline int cmd_simulate(const RunConfig& cfg, const LoadedGraph& lg, std::ostream& out) {
  no_csv(cfg);
  const WalkOperators w = build(lg.graph);
  if (cfg.x.has_value() == cfg.arc.has_value())
    throw UsageError("simulate needs exactly one of --x or --arc");
  ArcState state;
  Json start;
  if (cfg.x) {
    const Vertex x = resolve_vertex(lg.graph, *cfg.x);
    state = vertex_state(w, x);
    start = Json{{"vertex", x}, {"label", lg.graph.label(x)}};
  } else {
    if (*cfg.arc >= w.arc_count())
      throw UsageError("arc " + std::to_string(*cfg.arc) + " out of range");
    state = arc_state(w, *cfg.arc);
    start = Json{{"arc", *cfg.arc}};
  }

  Json arcs = Json::array();
  for (std::size_t a = 0; a < w.arc_count(); ++a)
    arcs.push_back(Json{{"index", a},
                        {"origin", w.arcs()[a].origin},
                        {"terminus", w.arcs()[a].terminus}});
  Json trace = Json::array();
  for (std::size_t t = 0; t <= cfg.steps; ++t) {
    if (t > 0) state = w.apply(state);
    Json re = Json::array(), im = Json::array();
    for (std::size_t a = 0; a < state.size(); ++a) {
      re.push_back(state[a].real());
      im.push_back(state[a].imag());
    }
    trace.push_back(Json{{"t", t}, {"norm", state.norm()}, {"re", re}, {"im", im}});
  }

  if (cfg.format == Format::Text) {
    out << "graph " << lg.spec << ", " << w.arc_count() << " arcs\n";
    for (const auto& row : trace) {
      out << "t=" << row["t"].get<std::size_t>() << " norm=" << row["norm"].dump() << " :";
      for (std::size_t a = 0; a < w.arc_count(); ++a) {
        const double v = row["re"][a].get<double>();
        if (v != 0.0 || row["im"][a].get<double>() != 0.0)
          out << ' ' << w.arcs()[a].origin << "->" << w.arcs()[a].terminus << '='
              << row["re"][a].dump();
      }
      out << '\n';
    }
    return kExitOk;
  }
  emit(out, Json{{"command", "simulate"},
                 {"graph", graph_json(lg)},
                 {"start", start},
                 {"steps", cfg.steps},
                 {"arcs", arcs},
                 {"trace", trace}});
  return kExitOk;
}

inline int cmd_pst(const RunConfig& cfg, const LoadedGraph& lg, std::ostream& out) {
  no_csv(cfg);
  const WalkOperators w = build(lg.graph);
  const Vertex x = resolve_vertex(lg.graph, require(cfg.x, "--x"));
  const Vertex y = resolve_vertex(lg.graph, require(cfg.y, "--y"));
  const std::size_t tau = require(cfg.tau, "--tau");
  const auto sd = decomposition_for(lg, w, cfg.cluster_tol);
  const TransferReport r = detect_pst(w, sd, x, y, tau, cfg.pst_tol);
  if (cfg.format == Format::Text) {
    out << lg.graph.label(x) << " -> " << lg.graph.label(y) << " at tau=" << tau
        << ": amplitude " << fmt_double(r.amplitude.real()) << (r.pst ? " PST" : " no PST")
        << (r.trivial ? " (trivial)" : "") << '\n';
    return kExitOk;
  }
  emit(out, Json{{"command", "pst"}, {"graph", graph_json(lg)}, {"report", to_json(r, lg.graph)}});
  return kExitOk;
}

inline int cmd_scan(const RunConfig& cfg, const LoadedGraph& lg, std::ostream& out) {
  const WalkOperators w = build(lg.graph);
  const Vertex x = resolve_vertex(lg.graph, require(cfg.x, "--x"));
  const auto sd = decomposition_for(lg, w, cfg.cluster_tol);
  const ScanResult s = scan_pst(w, sd, x, cfg.tau_max, pst_options(cfg));
  switch (cfg.format) {
    case Format::Csv:
      out << "source,target,tau,amplitude_re,amplitude_im,pst,trivial,method\n";
      for (const auto& h : s.hits)
        out << h.source << ',' << h.target << ',' << h.tau << ','
            << fmt_double(h.amplitude.real()) << ',' << fmt_double(h.amplitude.imag()) << ','
            << (h.pst ? "true" : "false") << ',' << (h.trivial ? "true" : "false") << ','
            << to_string(h.method) << '\n';
      break;
    case Format::Text:
      out << "scan from " << lg.graph.label(x) << ", tau 1.." << s.tau_max << ": "
          << s.hits.size() << " hit(s), " << s.pruned << " time(s) pruned\n";
      for (const auto& h : s.hits)
        out << "  tau=" << h.tau << " -> " << lg.graph.label(h.target) << " gamma="
            << fmt_double(h.amplitude.real()) << '\n';
      break;
    case Format::Json:
      emit(out, Json{{"command", "scan"}, {"graph", graph_json(lg)}, {"scan", to_json(s, lg.graph)}});
      break;
  }
  return kExitOk;
}

inline int cmd_period(const RunConfig& cfg, const LoadedGraph& lg, std::ostream& out) {
  no_csv(cfg);
  const PeriodReport p = find_period(build(lg.graph), cfg.bound, cfg.period_tol);
  if (cfg.format == Format::Text) {
    if (p.period)
      out << "period " << *p.period << '\n';
    else
      out << "none up to bound " << p.bound << '\n';
    return kExitOk;
  }
  emit(out, Json{{"command", "period"}, {"graph", graph_json(lg)}, {"period", to_json(p)}});
  return kExitOk;
}

inline int cmd_support(const RunConfig& cfg, const LoadedGraph& lg, std::ostream& out) {
  no_csv(cfg);
  const WalkOperators w = build(lg.graph);
  const Vertex x = resolve_vertex(lg.graph, require(cfg.x, "--x"));
  const auto sd = decomposition_for(lg, w, cfg.cluster_tol);
  const auto sup = support(sd, x, cfg.support_tol);
  if (cfg.format == Format::Text) {
    out << "support of " << lg.graph.label(x) << ":";
    for (double l : sup) out << ' ' << fmt_double(l);
    out << '\n';
    return kExitOk;
  }
  Json spectrum = Json::array();
  for (std::size_t i = 0; i < sd.distinct(); ++i)
    spectrum.push_back(Json{{"eigenvalue", sd.eigenvalues[i]}, {"rank", sd.rank(i)}});
  emit(out, Json{{"command", "support"},
                 {"graph", graph_json(lg)},
                 {"vertex", x},
                 {"label", lg.graph.label(x)},
                 {"spectrum", spectrum},
                 {"support", sup}});
  return kExitOk;
}

inline int cmd_verify_paper(const RunConfig& cfg, std::ostream& out) {
  no_csv(cfg);
  PstOptions opt = pst_options(cfg);
  const PaperVerification v = verify_paper(opt);
  if (cfg.format == Format::Text) {
    out << "r bound: " << v.report["r_bound"].size() << " cases\n";
    for (const char* key : {"bipartite", "tripartite"})
      out << key << ": " << v.report[key]["verdict"].get<std::string>() << '\n';
    out << "complete graphs: " << v.report["complete_graphs"]["verdict"].get<std::string>()
        << '\n';
    for (const auto& p : v.report["periods"])
      out << "period " << p["graph"].get<std::string>() << ": " << p["period"].dump() << " ("
          << p["verdict"].get<std::string>() << ")\n";
    out << "overall: " << v.report["verdict"].get<std::string>() << '\n';
  } else {
    emit(out, Json{{"command", "verify-paper"}, {"results", v.report}});
  }
  return v.pass ? kExitOk : kExitMismatch;
}

}  // namespace detail

/// Runs one command. Errors are reported on err and mapped to exit codes.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.pst_tol <= 0 || cfg.cluster_tol <= 0 || cfg.support_tol <= 0 ||
        cfg.period_tol <= 0)
      throw UsageError("tolerances must be positive");
    if (cfg.command == "verify-paper") return detail::cmd_verify_paper(cfg, out);

    const LoadedGraph lg = load_graph(detail::require(cfg.graph, "--graph"));
    if (cfg.command == "simulate") return detail::cmd_simulate(cfg, lg, out);
    if (cfg.command == "pst") return detail::cmd_pst(cfg, lg, out);
    if (cfg.command == "scan") return detail::cmd_scan(cfg, lg, out);
    if (cfg.command == "period") return detail::cmd_period(cfg, lg, out);
    if (cfg.command == "support") return detail::cmd_support(cfg, lg, out);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "walk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {  // includes GraphError
    err << "walk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "walk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MethodDisagreement& e) {
    err << "walk: internal check failed: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace gwalk::cli
