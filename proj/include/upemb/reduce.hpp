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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "upemb/genus.hpp"
#include "upemb/multigraph.hpp"
#include "upemb/transforms.hpp"

namespace upemb {

struct ReductionStep {
  /// Edge id in the graph before this step.
  EdgeId edge;
  FlexRule rule = FlexRule::kNone;
  VertexId merged;
  VertexId removed;
  std::vector<std::pair<EdgeId, EdgeId>> id_map;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  std::size_t initial_order = 0;
  std::size_t final_order = 0;

  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

struct Reduction {
  MultiGraph graph;
  ReductionTrace trace;
};

/// Contracts the lowest-id flexible edge until none is left.
Reduction flexible_weak_minor(const MultiGraph& g);

struct TraceCheck {
  bool ok = false;
  /// Index of the first step that failed, if a step failed.
  std::optional<std::size_t> failed_step;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Replays `t` from `g`, re-deriving every step's flexibility verdict and
/// rule, and checks the recorded orders. With `expected_final` the replayed
/// graph must also equal it exactly.
TraceCheck verify_trace(const MultiGraph& g, const ReductionTrace& t,
                        const MultiGraph* expected_final = nullptr);

struct ReducedCheck {
  /// Verdict on the reduced graph; betti is shared with the input.
  GenusReport report;
  Reduction reduction;
  std::size_t original_order = 0;
  std::size_t reduced_order = 0;
  /// Spanning-tree count of the input over that of the reduced graph.
  std::optional<double> tree_count_ratio;
};

/// Reduces first, then decides upper embeddability on the reduced graph.
/// Throws GuardExceeded if the reduced graph is above the guard.
ReducedCheck check_reduced(const MultiGraph& g, const EnumerationGuard& guard = {});

struct OrderExploration {
  /// Canonical certificate and order of every irreducible graph reachable by
  /// some contraction order.
  std::vector<std::pair<std::string, std::size_t>> irreducible;
  std::size_t states_visited = 0;
};

/// Tries every flexible edge at every step. Throws PreconditionError above
/// `max_vertices`.
OrderExploration explore_reduction_orders(const MultiGraph& g, std::size_t max_vertices = 10);

struct FamilyOptions {
  std::size_t max_vertices = 6;
  std::size_t max_graphs = 100;
  bool type1 = true;
  bool type2 = true;
  /// Worker threads for frontier expansion; results do not depend on it.
  std::size_t threads = 1;
  EnumerationGuard guard;
  /// Members up to this order are merged by exact isomorphism.
  std::size_t dedup_max_vertices = 10;
};

struct FamilyNode {
  MultiGraph graph;
  std::optional<std::size_t> parent;
  std::optional<SplitSpec> split;
  FlexRule rule = FlexRule::kNone;
  /// Splitting edge created by `split`, absent for the seed.
  std::optional<EdgeId> splitting_edge;
  std::size_t depth = 0;
  std::string certificate;
};

struct Family {
  /// Sorted by (depth, certificate); parent indices refer into this list.
  std::vector<FamilyNode> nodes;
  bool budget_exhausted = false;
  /// Candidates produced by a flexible split that failed the genus check.
  std::size_t rejected = 0;
};

/// Breadth-first closure of `seed` under type-I and type-II splits (loop ends
/// assignable, at least two ends per side). Every member is re-verified upper
/// embeddable. Throws PreconditionError if the seed is not upper embeddable.
Family generate_family(const MultiGraph& seed, const FamilyOptions& options = {});

std::string trace_to_json(const ReductionTrace& t);
ReductionTrace trace_from_json(std::string_view text);

std::string family_index_json(const Family& f);
/// Writes member_NNNN.mg1 for each node plus index.json.
void write_family_directory(const Family& f, const std::filesystem::path& dir);

}  // namespace upemb
