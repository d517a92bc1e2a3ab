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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "upemb/genus.hpp"
#include "upemb/multigraph.hpp"

namespace upemb {

/// One end of an edge: `end` 0 is the `u` endpoint, 1 the `w` endpoint.
struct EdgeEnd {
  EdgeId edge;
  std::uint8_t end = 0;

  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Assignment of the edge-ends at `vertex` to two sides. `side_a` goes to v',
/// every other end at the vertex goes to v''.
struct SplitSpec {
  VertexId vertex;
  std::vector<EdgeEnd> side_a;
};

struct SplitOptions {
  /// Accept loops at the split vertex; each loop end is assigned on its own.
  bool allow_loop_ends = false;
  /// Require at least two ends on each side.
  bool require_min_degree3 = false;
};

struct SplitResult {
  MultiGraph graph;
  /// v' keeps the id of the split vertex; v'' takes the next free vertex id.
  VertexId v_prime;
  VertexId v_double_prime;
  /// Takes the next free edge id.
  EdgeId splitting_edge;
  /// Old edge id -> new edge id for every original edge.
  std::vector<std::pair<EdgeId, EdgeId>> id_map;
};

struct ContractResult {
  MultiGraph graph;
  /// The lower of the two endpoint ids; it absorbs the other endpoint.
  VertexId merged;
  VertexId removed;
  /// Old edge id -> new edge id for every surviving edge.
  std::vector<std::pair<EdgeId, EdgeId>> id_map;
};

enum class FlexRule { kNone, kTypeI, kTypeII, kConditionI, kConditionII };

std::string_view to_string(FlexRule rule);
/// Inverse of to_string; throws Error for an unknown tag.
FlexRule flex_rule_from_string(std::string_view tag);

/// Outcome of a flexibility test together with the subgraph it examined.
struct FlexibilityVerdict {
  bool flexible = false;
  FlexRule rule = FlexRule::kNone;
  MultiGraph evidence;
  std::string finding;
};

/// Every end at `v` (two per loop), ascending.
std::vector<EdgeEnd> ends_at(const MultiGraph& g, VertexId v);

/// By-neighbour form: all ends of the edges from `v` to the listed neighbours
/// go to side A. Throws PreconditionError for a non-neighbour.
SplitSpec split_spec_by_neighbors(const MultiGraph& g, VertexId v, const std::vector<VertexId>& side_a_neighbors);

/// Throws PreconditionError on deg(v) < 4, an empty side, foreign or repeated
/// ends, a loop at v without `allow_loop_ends`, or a side with fewer than two
/// ends under `require_min_degree3`.
SplitResult split_vertex(const MultiGraph& g, const SplitSpec& spec, const SplitOptions& options = {});

/// Merges the endpoints of `e` and deletes it; edges parallel to `e` become
/// loops. Throws PreconditionError for a loop.
ContractResult contract_edge(const MultiGraph& g, EdgeId e);

/// Induced on v', v'' and their neighbours in the split graph.
MultiGraph splitting_subgraph(const SplitResult& r);

/// Induced on both endpoints of `e` and all their neighbours.
MultiGraph edge_global_subgraph(const MultiGraph& g, EdgeId e);
/// Induced on the neighbours of the endpoints of `e`, endpoints excluded.
MultiGraph edge_local_subgraph(const MultiGraph& g, EdgeId e);

/// deg(v) >= 4 and the local subgraph at v is connected and non-empty.
FlexibilityVerdict is_type1_flexible(const MultiGraph& g, VertexId v);

/// Splits transiently; flexible iff the splitting edge is not a cut-edge of
/// the splitting subgraph. Throws PreconditionError unless deg(v) == 4.
FlexibilityVerdict is_type2_flexible_split(const MultiGraph& g, const SplitSpec& spec,
                                           const SplitOptions& options = {});

/// Degree of the vertex that contracting `e` would produce.
std::size_t merged_degree(const MultiGraph& g, EdgeId e);

/// Condition I: merged degree exactly 4 and `e` not a cut-edge of its
/// edge-global subgraph. Condition II: merged degree at least 4 and a
/// connected non-empty edge-local subgraph. Condition I is reported when
/// both hold. An edge with a loop at either endpoint is never flexible.
/// Throws PreconditionError for a loop.
FlexibilityVerdict is_flexible_edge(const MultiGraph& g, EdgeId e);

std::string split_spec_to_json(const SplitSpec& spec);
SplitSpec split_spec_from_json(std::string_view text);

}  // namespace upemb
