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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace upemb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph construction (dangling endpoint, duplicate id, unknown id).
class GraphError : public Error {
 public:
  using Error::Error;
};

template <class Tag>
struct StrongId {
  std::uint32_t value = 0;

  constexpr StrongId() = default;
  constexpr explicit StrongId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(StrongId, StrongId) = default;
};

struct VertexTag {};
struct EdgeTag {};
using VertexId = StrongId<VertexTag>;
using EdgeId = StrongId<EdgeTag>;

std::string to_string(VertexId v);
std::string to_string(EdgeId e);

/// An undirected edge. Endpoints are stored with u <= w; u == w is a loop.
struct Edge {
  EdgeId id;
  VertexId u;
  VertexId w;

  [[nodiscard]] bool is_loop() const { return u == w; }
  [[nodiscard]] bool touches(VertexId v) const { return u == v || w == v; }
  /// The endpoint opposite `v`; for a loop this is `v` itself.
  [[nodiscard]] VertexId other(VertexId v) const { return u == v ? w : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable undirected multigraph with loops and parallel edges.
///
/// Vertex and edge ids are opaque and need not be contiguous: transformations
/// keep the ids of everything they do not touch, so traces that refer to ids
/// stay replayable. Vertices are kept sorted by id and edges sorted by id.
class MultiGraph {
 public:
  MultiGraph() = default;

  /// Vertices 0..vertex_count-1; edge ids assigned in input order from 0.
  /// Throws GraphError naming the offending edge index on a dangling endpoint.
  static MultiGraph build(std::size_t vertex_count,
                          std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);
  static MultiGraph build(std::size_t vertex_count,
                          std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges);

  /// Arbitrary ids. Throws GraphError on duplicate ids or dangling endpoints.
  static MultiGraph from_parts(std::vector<VertexId> vertices, std::vector<Edge> edges);

  [[nodiscard]] std::span<const VertexId> vertices() const { return vertices_; }
  [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }

  [[nodiscard]] bool has_vertex(VertexId v) const;
  [[nodiscard]] bool has_edge(EdgeId e) const;

  /// Throws GraphError for an unknown edge.
  [[nodiscard]] const Edge& edge(EdgeId e) const;

  /// Position of `v` in vertices(); throws GraphError for an unknown vertex.
  [[nodiscard]] std::size_t vertex_index(VertexId v) const;
  /// Position of `e` in edges(); throws GraphError for an unknown edge.
  [[nodiscard]] std::size_t edge_index(EdgeId e) const;

  /// Ids of the edges incident to `v`, ascending; a loop is listed once.
  [[nodiscard]] std::span<const EdgeId> incident(VertexId v) const;

  /// Smallest id strictly greater than every vertex id in use (0 if none).
  [[nodiscard]] VertexId next_vertex_id() const;
  [[nodiscard]] EdgeId next_edge_id() const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;  // parallel to vertices_
};

struct Component {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  [[nodiscard]] std::size_t edge_count() const { return edges.size(); }
};

/// Maximal connected pieces. Components are ordered by their smallest vertex
/// id; vertex and edge lists inside a component are ascending.
struct ComponentPartition {
  std::vector<Component> components;

  [[nodiscard]] std::size_t size() const { return components.size(); }
  /// Index of the component holding `v`.
  [[nodiscard]] std::size_t component_of(VertexId v) const;
};

/// Number of edge-ends at `v`; a loop contributes 2.
std::size_t degree(const MultiGraph& g, VertexId v);
std::size_t min_degree(const MultiGraph& g);
std::size_t max_degree(const MultiGraph& g);

/// Distinct vertices sharing a non-loop edge with `v`, ascending. `v` itself
/// is never included, even when it carries loops.
std::vector<VertexId> neighbors(const MultiGraph& g, VertexId v);

/// Subgraph on `vertices` holding every edge whose endpoints all lie in it.
/// Ids are retained. Throws GraphError if a vertex is not in `g`.
MultiGraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> vertices);

/// The v-local subgraph: induced on neighbors(g, v).
MultiGraph local_subgraph(const MultiGraph& g, VertexId v);

/// Same vertices, with the listed edges removed (unknown ids are ignored).
MultiGraph remove_edges(const MultiGraph& g, std::span<const EdgeId> removed);

ComponentPartition components(const MultiGraph& g);

/// Exactly one component. The empty graph is not connected.
bool is_connected(const MultiGraph& g);

/// True iff deleting `e` increases the number of components.
bool is_cut_edge(const MultiGraph& g, EdgeId e);

/// All cut-edges, ascending by id.
std::vector<EdgeId> bridges(const MultiGraph& g);

/// |E| - |V| + 1. Throws GraphError for a disconnected graph.
std::size_t betti(const MultiGraph& g);

/// Every vertex has a connected, non-empty local subgraph.
bool is_locally_connected(const MultiGraph& g);

}  // namespace upemb

template <class Tag>
struct std::hash<upemb::StrongId<Tag>> {
  std::size_t operator()(upemb::StrongId<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
