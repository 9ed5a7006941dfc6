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

#include <cstdint>
#include <numeric>
#include <vector>

#include "gwalk/graph.hpp"

namespace gwalk {

namespace detail {

inline bool mask_connected(std::uint32_t mask, std::size_t n,
                           const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<std::uint32_t> nb(n, 0);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (mask >> k & 1u) {
      nb[pairs[k].first] |= 1u << pairs[k].second;
      nb[pairs[k].second] |= 1u << pairs[k].first;
    }
  }
  std::uint32_t seen = 1u, frontier = 1u;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (frontier >> x & 1u) next |= nb[x];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1u;
}

}  // namespace detail

/**
 * All connected simple graphs on n vertices up to isomorphism, by brute
 * force over edge subsets. Each class is represented by its smallest edge
 * mask (pairs ordered lexicographically), so the output order is stable.
 * Practical for n <= 7.
 */
inline std::vector<Graph> connected_graphs(std::size_t n) {
  if (n < 2 || n > 7) throw GraphError("connected_graphs supports 2 <= n <= 7");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      pair_index[x][y] = pair_index[y][x] = static_cast<int>(pairs.size());
      pairs.emplace_back(x, y);
    }
  const std::size_t npairs = pairs.size();

  // Pair permutation induced by each vertex permutation.
  std::vector<std::vector<int>> pair_perms;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> pp(npairs);
    for (std::size_t k = 0; k < npairs; ++k)
      pp[k] = pair_index[perm[pairs[k].first]][perm[pairs[k].second]];
    pair_perms.push_back(std::move(pp));
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::uint32_t limit = 1u << npairs;
  std::vector<bool> visited(limit, false);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (visited[mask]) continue;
    if (!detail::mask_connected(mask, n, pairs)) continue;
    for (const auto& pp : pair_perms) {
      std::uint32_t image = 0;
      for (std::size_t k = 0; k < npairs; ++k)
        if (mask >> k & 1u) image |= 1u << pp[k];
      visited[image] = true;
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t k = 0; k < npairs; ++k)
      if (mask >> k & 1u) edges.push_back(pairs[k]);
    out.emplace_back(n, edges);
  }
  return out;
}

/// Connected graphs for every order 2..max_n, concatenated by order.
inline std::vector<Graph> connected_graph_corpus(std::size_t max_n) {
  std::vector<Graph> all;
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto part = connected_graphs(n);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace gwalk
