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
#include <compare>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace gwalk {

using Vertex = std::size_t;

/// Raised for malformed graph input: self-loops, duplicate edges,
/// disconnected vertex sets, bad family parameters.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/**
 * Finite simple connected graph on vertices 0..n-1.
 *
 * Immutable after construction. Labels are cosmetic; every computation
 * works on dense indices.
 */
class Graph {
 public:
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
        std::vector<std::string> labels = {})
      : n_(n), labels_(std::move(labels)), adj_(n) {
    if (n < 2) throw GraphError("graph needs at least 2 vertices");
    if (!labels_.empty() && labels_.size() != n)
      throw GraphError("label count does not match vertex count");
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a >= n || b >= n) {
        std::ostringstream os;
        os << "edge (" << a << ", " << b << ") out of range for " << n
           << " vertices";
        throw GraphError(os.str());
      }
      if (a == b) {
        throw GraphError("self-loop at vertex " + label(a));
      }
      edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        dup != edges_.end()) {
      throw GraphError("repeated edge {" + label(dup->u) + ", " +
                       label(dup->v) + "}");
    }
    for (const Edge& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    check_connected();
  }

  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges,
        std::vector<std::string> labels = {})
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(),
                                                             edges.size()),
              std::move(labels)) {}

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex x) const { return adj_.at(x); }
  std::size_t degree(Vertex x) const { return adj_.at(x).size(); }

  bool adjacent(Vertex x, Vertex y) const {
    const auto& nb = adj_.at(x);
    return std::binary_search(nb.begin(), nb.end(), y);
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::string label(Vertex x) const {
    return labels_.empty() ? std::to_string(x) : labels_.at(x);
  }

  std::optional<Vertex> find_label(std::string_view name) const {
    for (Vertex x = 0; x < labels_.size(); ++x)
      if (labels_[x] == name) return x;
    return std::nullopt;
  }

  /// Degree k if every vertex has degree k.
  std::optional<std::size_t> regular_degree() const {
    const std::size_t k = degree(0);
    for (Vertex x = 1; x < n_; ++x)
      if (degree(x) != k) return std::nullopt;
    return k;
  }

  Eigen::MatrixXd adjacency() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (const Edge& e : edges_) a(e.u, e.v) = a(e.v, e.u) = 1.0;
    return a;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_connected() const {
    std::vector<int> comp(n_, -1);
    int ncomp = 0;
    std::vector<Vertex> reps;
    for (Vertex s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      reps.push_back(s);
      std::queue<Vertex> q;
      q.push(s);
      comp[s] = ncomp;
      while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        for (Vertex y : adj_[x]) {
          if (comp[y] < 0) {
            comp[y] = ncomp;
            q.push(y);
          }
        }
      }
      ++ncomp;
    }
    if (ncomp > 1) {
      throw GraphError("graph is disconnected: vertices " + label(reps[0]) +
                       " and " + label(reps[1]) +
                       " lie in different components");
    }
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_;
};

// ---------------------------------------------------------------------------
// Arcs

struct Arc {
  Vertex origin;
  Vertex terminus;
  std::size_t inverse;
};

/**
 * Symmetric arc set of a graph: both orientations of every edge, sorted
 * lexicographically by (origin, terminus).
 */
class ArcSet {
 public:
  ArcSet() = default;

  explicit ArcSet(const Graph& g) : incoming_(g.order()), outgoing_(g.order()) {
    arcs_.reserve(2 * g.size());
    for (Vertex x = 0; x < g.order(); ++x)
      for (Vertex y : g.neighbors(x)) arcs_.push_back(Arc{x, y, 0});
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
      arcs_[a].inverse = *find(arcs_[a].terminus, arcs_[a].origin);
      outgoing_[arcs_[a].origin].push_back(a);
      incoming_[arcs_[a].terminus].push_back(a);
    }
  }

  std::size_t size() const { return arcs_.size(); }
  const Arc& operator[](std::size_t a) const { return arcs_[a]; }
  auto begin() const { return arcs_.begin(); }
  auto end() const { return arcs_.end(); }

  std::optional<std::size_t> find(Vertex o, Vertex t) const {
    auto it = std::lower_bound(
        arcs_.begin(), arcs_.end(), std::pair{o, t},
        [](const Arc& a, const std::pair<Vertex, Vertex>& key) {
          return std::pair{a.origin, a.terminus} < key;
        });
    if (it == arcs_.end() || it->origin != o || it->terminus != t)
      return std::nullopt;
    return static_cast<std::size_t>(it - arcs_.begin());
  }

  /// Arcs a with t(a) = x.
  std::span<const std::size_t> incoming(Vertex x) const {
    return incoming_.at(x);
  }
  /// Arcs a with o(a) = x.
  std::span<const std::size_t> outgoing(Vertex x) const {
    return outgoing_.at(x);
  }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> incoming_;
  std::vector<std::vector<std::size_t>> outgoing_;
};

inline ArcSet build_arcs(const Graph& g) { return ArcSet(g); }

// ---------------------------------------------------------------------------
// Edge-list text format

/**
 * Parses one edge per line, two whitespace-separated endpoint tokens.
 * Lines starting with '#' and blank lines are skipped. Tokens are kept as
 * vertex labels and reindexed densely in order of first appearance.
 * Repeated edges collapse into one.
 */
inline Graph from_edge_list(std::string_view text) {
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::string> labels;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto intern = [&](const std::string& tok) {
    auto [it, fresh] = index.try_emplace(tok, labels.size());
    if (fresh) labels.push_back(tok);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw GraphError("line " + std::to_string(lineno) +
                       ": expected exactly two endpoints");
    }
    if (a == b) {
      throw GraphError("line " + std::to_string(lineno) + ": self-loop at " +
                       a);
    }
    Vertex u = intern(a), v = intern(b);
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (edges.empty()) throw GraphError("edge list is empty");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const std::size_t n = labels.size();
  return Graph(n, edges, std::move(labels));
}

// ---------------------------------------------------------------------------
// Families

/**
 * Layout of the complete r-partite graph with parts of size m.
 * Member i of part j (both 0-based) sits at index j*m + i, so the
 * adjacency matrix is A(K_r) (x) J_m.
 */
struct MultipartiteSpec {
  std::size_t r;
  std::size_t m;

  std::size_t order() const { return r * m; }
  std::size_t degree() const { return m * (r - 1); }
  Vertex vertex(std::size_t part, std::size_t member) const {
    return part * m + member;
  }
  std::size_t part_of(Vertex x) const { return x / m; }
  std::size_t member_of(Vertex x) const { return x % m; }
};

inline Graph complete_multipartite(std::size_t r, std::size_t m) {
  if (r < 2) throw GraphError("multipartite graph needs r >= 2");
  if (m < 1) throw GraphError("multipartite graph needs m >= 1");
  MultipartiteSpec spec{r, m};
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < m; ++i)
      labels.push_back("v" + std::to_string(i + 1) + "^(" +
                       std::to_string(j + 1) + ")");
  for (Vertex x = 0; x < spec.order(); ++x)
    for (Vertex y = x + 1; y < spec.order(); ++y)
      if (spec.part_of(x) != spec.part_of(y)) edges.emplace_back(x, y);
  return Graph(spec.order(), edges, std::move(labels));
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex x = 0; x < n; ++x) edges.emplace_back(x, (x + 1) % n);
  return Graph(n, edges);
}

inline Graph complete(std::size_t n) {
  if (n < 2) throw GraphError("complete graph needs n >= 2");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) edges.emplace_back(x, y);
  return Graph(n, edges);
}

}  // namespace gwalk
