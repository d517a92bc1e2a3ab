// Copyright 2026 The upemb Authors
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

// Random graph generators and brute-force oracles shared by the test binaries.
// The oracles deliberately avoid the library's algorithms: spanning trees come
// from subset enumeration, connectivity from a plain BFS over edge lists.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "upemb/genus.hpp"
#include "upemb/graphio.hpp"
#include "upemb/multigraph.hpp"
#include "upemb/transforms.hpp"

namespace upemb::testing {

using Rng = std::mt19937_64;

struct RandomGraphSpec {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 7;
  std::size_t max_edges = 12;
  bool loops = true;
  bool parallel = true;
  bool min_degree3 = true;
};

// Random connected multigraph: random tree, extra random edges, then edges
// added at low-degree vertices. Retries until every bound holds.
inline MultiGraph random_graph(Rng& rng, const RandomGraphSpec& spec = {}) {
  for (;;) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(spec.min_vertices, spec.max_vertices)(rng);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    std::vector<std::size_t> deg(n, 0);
    auto add = [&](std::uint32_t a, std::uint32_t b) {
      if (a == b && !spec.loops) return false;
      auto key = std::minmax(a, b);
      if (!spec.parallel && seen.count(key)) return false;
      seen.insert(key);
      edges.emplace_back(a, b);
      deg[a] += 1;
      deg[b] += 1;
      return true;
    };
    for (std::uint32_t i = 1; i < n; ++i) {
      add(std::uniform_int_distribution<std::uint32_t>(0, i - 1)(rng), i);
    }
    if (edges.size() > spec.max_edges) continue;
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
    std::size_t target = std::uniform_int_distribution<std::size_t>(edges.size(), spec.max_edges)(rng);
    for (int tries = 0; edges.size() < target && tries < 200; ++tries) add(pick(rng), pick(rng));
    if (spec.min_degree3) {
      for (int tries = 0; tries < 400 && edges.size() < spec.max_edges; ++tries) {
        auto low = std::find_if(deg.begin(), deg.end(), [](std::size_t d) { return d < 3; });
        if (low == deg.end()) break;
        add(static_cast<std::uint32_t>(low - deg.begin()), pick(rng));
      }
      if (std::any_of(deg.begin(), deg.end(), [](std::size_t d) { return d < 3; })) continue;
    }
    if (edges.empty() && n > 1) continue;
    return MultiGraph::build(n, edges);
  }
}

// Connected components by BFS over an explicit edge subset.
inline std::vector<std::vector<std::size_t>> oracle_components(const MultiGraph& g, const std::vector<bool>& keep) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!keep[i]) continue;
    std::size_t a = g.vertex_index(edges[i].u);
    std::size_t b = g.vertex_index(edges[i].w);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> label(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    out.emplace_back();
    std::queue<std::size_t> q;
    q.push(s);
    label[s] = static_cast<int>(out.size() - 1);
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      out.back().push_back(x);
      for (std::size_t y : adj[x]) {
        if (label[y] < 0) {
          label[y] = label[s];
          q.push(y);
        }
      }
    }
  }
  return out;
}

inline bool oracle_connected(const MultiGraph& g) {
  return g.vertex_count() > 0 && oracle_components(g, std::vector<bool>(g.edge_count(), true)).size() == 1;
}

inline bool oracle_is_cut_edge(const MultiGraph& g, EdgeId e) {
  std::vector<bool> all(g.edge_count(), true);
  std::size_t before = oracle_components(g, all).size();
  all[g.edge_index(e)] = false;
  return oracle_components(g, all).size() > before;
}

// Every spanning tree, as a sorted list of edge ids, by testing all
// (|V|-1)-subsets of non-loop edges for acyclicity.
inline std::vector<std::vector<EdgeId>> oracle_spanning_trees(const MultiGraph& g) {
  std::vector<std::vector<EdgeId>> out;
  const std::size_t n = g.vertex_count();
  std::vector<EdgeId> candidates;
  for (const Edge& e : g.edges()) {
    if (!e.is_loop()) candidates.push_back(e.id);
  }
  const std::size_t k = n - 1;
  if (k > candidates.size()) return out;
  std::vector<bool> choose(candidates.size(), false);
  std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<bool> keep(g.edge_count(), false);
    std::vector<EdgeId> tree;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (choose[i]) {
        keep[g.edge_index(candidates[i])] = true;
        tree.push_back(candidates[i]);
      }
    }
    if (oracle_components(g, keep).size() == 1) out.push_back(tree);
  } while (std::prev_permutation(choose.begin(), choose.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Odd co-tree components for one tree.
inline std::size_t oracle_tree_xi(const MultiGraph& g, const std::vector<EdgeId>& tree) {
  std::vector<bool> keep(g.edge_count(), true);
  for (EdgeId e : tree) keep[g.edge_index(e)] = false;
  std::size_t odd = 0;
  for (const auto& comp : oracle_components(g, keep)) {
    std::set<std::size_t> in(comp.begin(), comp.end());
    std::size_t count = 0;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (keep[i] && in.count(g.vertex_index(edges[i].u))) ++count;
    }
    odd += count % 2;
  }
  return odd;
}

inline std::size_t oracle_xi(const MultiGraph& g) {
  std::size_t best = SIZE_MAX;
  for (const auto& t : oracle_spanning_trees(g)) best = std::min(best, oracle_tree_xi(g, t));
  return best;
}

// Edges of `g` whose endpoints both lie in `s`, as sorted endpoint pairs.
inline std::multiset<std::pair<std::uint32_t, std::uint32_t>> oracle_induced_pairs(const MultiGraph& g,
                                                                                  const std::set<VertexId>& s) {
  std::multiset<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const Edge& e : g.edges()) {
    if (s.count(e.u) && s.count(e.w)) out.insert(std::minmax(e.u.value, e.w.value));
  }
  return out;
}

inline std::multiset<std::pair<std::uint32_t, std::uint32_t>> pairs_of(const MultiGraph& g) {
  std::multiset<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const Edge& e : g.edges()) out.insert(std::minmax(e.u.value, e.w.value));
  return out;
}

// Uniform random split spec at v with both sides non-empty; with `min3`,
// two ends per side.
inline std::optional<SplitSpec> random_split(Rng& rng, const MultiGraph& g, VertexId v, bool min3) {
  std::vector<EdgeEnd> ends = ends_at(g, v);
  const std::size_t lo = min3 ? 2 : 1;
  if (ends.size() < 2 * lo) return std::nullopt;
  std::shuffle(ends.begin(), ends.end(), rng);
  std::size_t k = std::uniform_int_distribution<std::size_t>(lo, ends.size() - lo)(rng);
  SplitSpec spec{v, std::vector<EdgeEnd>(ends.begin(), ends.begin() + static_cast<std::ptrdiff_t>(k))};
  std::sort(spec.side_a.begin(), spec.side_a.end());
  return spec;
}

inline bool has_loop_at(const MultiGraph& g, VertexId v) {
  for (EdgeId e : g.incident(v)) {
    if (g.edge(e).is_loop()) return true;
  }
  return false;
}

inline MultiGraph fixture(const char* name) { return fixtures::named(name).graph; }

inline VertexId label(const char* fixture_name, const char* name) {
  return fixtures::named(fixture_name).resolve(name);
}

}  // namespace upemb::testing
