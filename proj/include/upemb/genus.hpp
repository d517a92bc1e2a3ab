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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "upemb/multigraph.hpp"

namespace upemb {

/// Raised when an exhaustive computation would exceed the enumeration guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation's hypothesis does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Edge-id set of a spanning tree, ascending. Never contains a loop.
struct SpanningTree {
  std::vector<EdgeId> edges;

  [[nodiscard]] bool contains(EdgeId e) const;
  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

/// Caps exhaustive spanning-tree enumeration at `max_edges` edges unless
/// `unlimited` is set.
struct EnumerationGuard {
  std::size_t max_edges = 30;
  bool unlimited = false;

  /// Throws GuardExceeded when `g` is too large.
  void check(const MultiGraph& g) const;
};

struct DeficiencyReport {
  SpanningTree tree;
  /// Number of co-tree components with an odd number of edges.
  std::size_t xi_of_tree = 0;
  /// Edge counts of the co-tree components that carry at least one edge,
  /// ordered by smallest vertex id. Sums to the Betti number.
  std::vector<std::size_t> component_edge_counts;
};

enum class GenusMode { kExact, kHeuristic };

struct GenusReport {
  std::size_t betti = 0;
  /// Exact deficiency, or an upper bound on it in heuristic mode.
  std::size_t xi = 0;
  /// (betti - xi) / 2; a lower bound on the maximum genus in heuristic mode.
  std::size_t max_genus = 0;
  /// In heuristic mode a true verdict is certain, a false one is not.
  bool upper_embeddable = false;
  std::optional<SpanningTree> witness;
  GenusMode mode = GenusMode::kExact;
};

struct GenusOptions {
  GenusMode mode = GenusMode::kExact;
  EnumerationGuard guard;
  std::size_t effort = 1000;
  std::uint64_t seed = 0;
};

/// Calls `visit` once per spanning tree in a deterministic order (edges
/// decided by ascending id, inclusion branch first). Enumeration stops as soon
/// as `visit` returns false. Throws GraphError for a disconnected graph and
/// GuardExceeded above the guard.
void for_each_spanning_tree(const MultiGraph& g, const std::function<bool(const SpanningTree&)>& visit,
                            const EnumerationGuard& guard = {});

std::vector<SpanningTree> spanning_trees(const MultiGraph& g, const EnumerationGuard& guard = {});

/// Number of spanning trees by the matrix-tree theorem (floating point).
double count_spanning_trees(const MultiGraph& g);

/// True iff `t` is an acyclic, loop-free edge set of `g` spanning every vertex.
bool is_spanning_tree(const MultiGraph& g, const SpanningTree& t);

/// Throws PreconditionError if `t` is not a spanning tree of `g`.
DeficiencyReport deficiency(const MultiGraph& g, const SpanningTree& t);

struct XiResult {
  std::size_t xi = 0;
  SpanningTree witness;
};

/// Minimum deficiency over all spanning trees. Stops early once a tree
/// reaches betti mod 2, which no tree can beat.
XiResult xi(const MultiGraph& g, const EnumerationGuard& guard = {});

GenusReport max_genus(const MultiGraph& g, const GenusOptions& options = {});

/// First spanning tree, in enumeration order, with at most one odd co-tree
/// component.
std::optional<SpanningTree> find_splitting_tree(const MultiGraph& g, const EnumerationGuard& guard = {});

bool is_upper_embeddable(const MultiGraph& g, const EnumerationGuard& guard = {});

/// Rotates the splitting tree `t` until it holds one edge from `v` to each
/// neighbour of `v` (the lowest-id edge when there are parallels). Each
/// missing edge v-u replaces the last edge of the tree path from v to u.
/// Requires: `t` a splitting tree of `g`, deg(v) >= 3, no loop at v, and a
/// connected non-empty local subgraph at v. Throws PreconditionError naming
/// the failed hypothesis.
SpanningTree retree_around_vertex(const MultiGraph& g, const SpanningTree& t, VertexId v);

/// Upper bound on xi from a seeded random spanning tree improved by
/// fundamental-cycle edge swaps. Always the deficiency of an actual tree, so
/// it is >= xi(g) and has the parity of betti(g).
XiResult xi_heuristic(const MultiGraph& g, std::size_t effort, std::uint64_t seed = 0);

/// Graph MG1 text, then "# splitting tree" and one "t <edge-id>" line per tree edge.
std::string emit_witness(const MultiGraph& g, const SpanningTree& t);
std::pair<MultiGraph, SpanningTree> parse_witness(std::string_view text);
/// JSON array of edge ids.
std::string tree_to_json(const SpanningTree& t);

}  // namespace upemb
