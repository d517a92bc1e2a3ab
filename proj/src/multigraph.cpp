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

#include "upemb/multigraph.hpp"

#include <algorithm>
#include <limits>

#include "disjoint_sets.hpp"

namespace upemb {

std::string to_string(VertexId v) { return std::to_string(v.value); }
std::string to_string(EdgeId e) { return std::to_string(e.value); }

MultiGraph MultiGraph::build(std::size_t vertex_count,
                             std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::vector<VertexId> vs;
  vs.reserve(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) vs.emplace_back(static_cast<std::uint32_t>(i));
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (a >= vertex_count || b >= vertex_count) {
      throw GraphError("edge " + std::to_string(i) + " has a dangling endpoint (" +
                       std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    es.push_back(Edge{EdgeId{static_cast<std::uint32_t>(i)}, VertexId{a}, VertexId{b}});
  }
  return from_parts(std::move(vs), std::move(es));
}

MultiGraph MultiGraph::build(std::size_t vertex_count,
                             std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges) {
  return build(vertex_count, std::span(edges.begin(), edges.size()));
}

MultiGraph MultiGraph::from_parts(std::vector<VertexId> vertices, std::vector<Edge> edges) {
  MultiGraph g;
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end()) {
    throw GraphError("duplicate vertex id " + to_string(*dup));
  }
  g.vertices_ = std::move(vertices);
  for (auto& e : edges) {
    if (e.w < e.u) std::swap(e.u, e.w);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].id == edges[i - 1].id) {
      throw GraphError("duplicate edge id " + to_string(edges[i].id));
    }
  }
  g.edges_ = std::move(edges);
  g.incidence_.assign(g.vertices_.size(), {});
  for (const auto& e : g.edges_) {
    if (!g.has_vertex(e.u) || !g.has_vertex(e.w)) {
      throw GraphError("edge " + to_string(e.id) + " has a dangling endpoint (" + to_string(e.u) +
                       ", " + to_string(e.w) + ")");
    }
    g.incidence_[g.vertex_index(e.u)].push_back(e.id);
    if (!e.is_loop()) g.incidence_[g.vertex_index(e.w)].push_back(e.id);
  }
  return g;
}

bool MultiGraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool MultiGraph::has_edge(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& x, EdgeId id) { return x.id < id; });
  return it != edges_.end() && it->id == e;
}

const Edge& MultiGraph::edge(EdgeId e) const { return edges_[edge_index(e)]; }

std::size_t MultiGraph::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw GraphError("unknown vertex " + to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t MultiGraph::edge_index(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& x, EdgeId id) { return x.id < id; });
  if (it == edges_.end() || it->id != e) throw GraphError("unknown edge " + to_string(e));
  return static_cast<std::size_t>(it - edges_.begin());
}

std::span<const EdgeId> MultiGraph::incident(VertexId v) const {
  return incidence_[vertex_index(v)];
}

VertexId MultiGraph::next_vertex_id() const {
  return vertices_.empty() ? VertexId{0} : VertexId{vertices_.back().value + 1};
}

EdgeId MultiGraph::next_edge_id() const {
  return edges_.empty() ? EdgeId{0} : EdgeId{edges_.back().id.value + 1};
}

std::size_t ComponentPartition::component_of(VertexId v) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& vs = components[i].vertices;
    if (std::binary_search(vs.begin(), vs.end(), v)) return i;
  }
  throw GraphError("unknown vertex " + to_string(v));
}

std::size_t degree(const MultiGraph& g, VertexId v) {
  std::size_t d = 0;
  for (EdgeId id : g.incident(v)) d += g.edge(id).is_loop() ? 2 : 1;
  return d;
}

std::size_t min_degree(const MultiGraph& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (VertexId v : g.vertices()) best = std::min(best, degree(g, v));
  return g.vertex_count() == 0 ? 0 : best;
}

std::size_t max_degree(const MultiGraph& g) {
  std::size_t best = 0;
  for (VertexId v : g.vertices()) best = std::max(best, degree(g, v));
  return best;
}

std::vector<VertexId> neighbors(const MultiGraph& g, VertexId v) {
  std::vector<VertexId> out;
  for (EdgeId id : g.incident(v)) {
    const Edge& e = g.edge(id);
    if (!e.is_loop()) out.push_back(e.other(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MultiGraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (VertexId v : keep) {
    if (!g.has_vertex(v)) throw GraphError("unknown vertex " + to_string(v));
  }
  auto inside = [&](VertexId v) { return std::binary_search(keep.begin(), keep.end(), v); };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (inside(e.u) && inside(e.w)) edges.push_back(e);
  }
  return MultiGraph::from_parts(std::move(keep), std::move(edges));
}

MultiGraph local_subgraph(const MultiGraph& g, VertexId v) {
  auto ns = neighbors(g, v);
  return induced_subgraph(g, ns);
}

MultiGraph remove_edges(const MultiGraph& g, std::span<const EdgeId> removed) {
  std::vector<EdgeId> gone(removed.begin(), removed.end());
  std::sort(gone.begin(), gone.end());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(gone.begin(), gone.end(), e.id)) edges.push_back(e);
  }
  std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
  return MultiGraph::from_parts(std::move(vs), std::move(edges));
}

ComponentPartition components(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  detail::DisjointSets sets(n);
  for (const Edge& e : g.edges()) sets.unite(g.vertex_index(e.u), g.vertex_index(e.w));

  ComponentPartition out;
  std::vector<std::size_t> slot(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = sets.find(i);
    if (slot[root] == std::numeric_limits<std::size_t>::max()) {
      slot[root] = out.components.size();
      out.components.emplace_back();
    }
    out.components[slot[root]].vertices.push_back(g.vertices()[i]);
  }
  for (const Edge& e : g.edges()) {
    out.components[slot[sets.find(g.vertex_index(e.u))]].edges.push_back(e.id);
  }
  return out;
}

bool is_connected(const MultiGraph& g) { return components(g).size() == 1; }

std::vector<EdgeId> bridges(const MultiGraph& g) {
  // Iterative low-link DFS; parallel edges are told apart by edge id.
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> order(n, kUnseen), low(n, 0);
  std::vector<EdgeId> out;
  std::size_t counter = 0;

  struct Frame {
    std::size_t vertex;
    EdgeId via;
    bool has_via;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != kUnseen) continue;
    std::vector<Frame> stack{{root, EdgeId{}, false, 0}};
    order[root] = low[root] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(g.vertices()[f.vertex]);
      if (f.next < inc.size()) {
        EdgeId id = inc[f.next++];
        const Edge& e = g.edge(id);
        if (e.is_loop() || (f.has_via && id == f.via)) continue;
        std::size_t to = g.vertex_index(e.other(g.vertices()[f.vertex]));
        if (order[to] == kUnseen) {
          order[to] = low[to] = counter++;
          stack.push_back({to, id, true, 0});
        } else {
          low[f.vertex] = std::min(low[f.vertex], order[to]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.vertex] = std::min(low[parent.vertex], low[done.vertex]);
          if (low[done.vertex] > order[parent.vertex]) out.push_back(done.via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cut_edge(const MultiGraph& g, EdgeId e) {
  if (g.edge(e).is_loop()) return false;
  auto bs = bridges(g);
  return std::binary_search(bs.begin(), bs.end(), e);
}

std::size_t betti(const MultiGraph& g) {
  if (!is_connected(g)) throw GraphError("betti number requires a connected graph");
  return g.edge_count() - g.vertex_count() + 1;
}

bool is_locally_connected(const MultiGraph& g) {
  if (g.vertex_count() == 0) return false;
  for (VertexId v : g.vertices()) {
    if (!is_connected(local_subgraph(g, v))) return false;
  }
  return true;
}

}  // namespace upemb
