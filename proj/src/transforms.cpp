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

#include "upemb/transforms.hpp"

#include <algorithm>

#include "json.hpp"
#include "upemb/graphio.hpp"

namespace upemb {

namespace {

void require_non_loop(const MultiGraph& g, EdgeId e) {
  if (g.edge(e).is_loop()) throw PreconditionError("edge " + to_string(e) + " is a loop");
}

std::vector<VertexId> merge_sets(std::vector<VertexId> a, const std::vector<VertexId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

std::string_view to_string(FlexRule rule) {
  switch (rule) {
    case FlexRule::kTypeI: return "type-I";
    case FlexRule::kTypeII: return "type-II";
    case FlexRule::kConditionI: return "condition-I";
    case FlexRule::kConditionII: return "condition-II";
    case FlexRule::kNone: break;
  }
  return "none";
}

FlexRule flex_rule_from_string(std::string_view tag) {
  for (FlexRule r : {FlexRule::kNone, FlexRule::kTypeI, FlexRule::kTypeII, FlexRule::kConditionI,
                     FlexRule::kConditionII}) {
    if (to_string(r) == tag) return r;
  }
  throw Error("unknown rule tag '" + std::string(tag) + "'");
}

std::vector<EdgeEnd> ends_at(const MultiGraph& g, VertexId v) {
  std::vector<EdgeEnd> out;
  for (EdgeId id : g.incident(v)) {
    const Edge& e = g.edge(id);
    if (e.u == v) out.push_back({id, 0});
    if (e.w == v) out.push_back({id, 1});
  }
  return out;
}

SplitSpec split_spec_by_neighbors(const MultiGraph& g, VertexId v, const std::vector<VertexId>& side_a_neighbors) {
  auto ns = neighbors(g, v);
  SplitSpec spec{v, {}};
  for (VertexId u : side_a_neighbors) {
    if (!std::binary_search(ns.begin(), ns.end(), u)) {
      throw PreconditionError("vertex " + to_string(u) + " is not a neighbour of " + to_string(v));
    }
  }
  for (const EdgeEnd& end : ends_at(g, v)) {
    const Edge& e = g.edge(end.edge);
    if (e.is_loop()) continue;
    if (std::find(side_a_neighbors.begin(), side_a_neighbors.end(), e.other(v)) != side_a_neighbors.end()) {
      spec.side_a.push_back(end);
    }
  }
  return spec;
}

SplitResult split_vertex(const MultiGraph& g, const SplitSpec& spec, const SplitOptions& options) {
  const VertexId v = spec.vertex;
  if (!g.has_vertex(v)) throw PreconditionError("vertex " + to_string(v) + " is not in the graph");
  const std::size_t deg = degree(g, v);
  if (deg < 4) throw PreconditionError("vertex " + to_string(v) + " has degree " + std::to_string(deg) + " < 4");

  auto all = ends_at(g, v);
  if (!options.allow_loop_ends) {
    for (const EdgeEnd& end : all) {
      if (g.edge(end.edge).is_loop()) {
        throw PreconditionError("vertex " + to_string(v) + " carries loop " + to_string(end.edge) +
                                "; loop-end assignment is not enabled");
      }
    }
  }
  std::vector<EdgeEnd> side_a = spec.side_a;
  std::sort(side_a.begin(), side_a.end());
  if (std::adjacent_find(side_a.begin(), side_a.end()) != side_a.end()) {
    throw PreconditionError("edge-end listed twice in side A");
  }
  for (const EdgeEnd& end : side_a) {
    if (!std::binary_search(all.begin(), all.end(), end)) {
      throw PreconditionError("edge " + to_string(end.edge) + " end " + std::to_string(end.end) +
                              " is not an end at vertex " + to_string(v));
    }
  }
  const std::size_t a_count = side_a.size();
  const std::size_t b_count = all.size() - a_count;
  if (a_count == 0 || b_count == 0) throw PreconditionError("split leaves a side empty");
  if (options.require_min_degree3 && (a_count < 2 || b_count < 2)) {
    throw PreconditionError("split gives a side fewer than two ends");
  }

  SplitResult r;
  r.v_prime = v;
  r.v_double_prime = g.next_vertex_id();
  r.splitting_edge = g.next_edge_id();
  std::vector<VertexId> vertices(g.vertices().begin(), g.vertices().end());
  vertices.push_back(r.v_double_prime);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 1);
  for (const Edge& e : g.edges()) {
    Edge moved = e;
    if (e.u == v && !std::binary_search(side_a.begin(), side_a.end(), EdgeEnd{e.id, 0})) moved.u = r.v_double_prime;
    if (e.w == v && !std::binary_search(side_a.begin(), side_a.end(), EdgeEnd{e.id, 1})) moved.w = r.v_double_prime;
    edges.push_back(moved);
    r.id_map.emplace_back(e.id, e.id);
  }
  edges.push_back(Edge{r.splitting_edge, r.v_prime, r.v_double_prime});
  r.graph = MultiGraph::from_parts(std::move(vertices), std::move(edges));
  return r;
}

ContractResult contract_edge(const MultiGraph& g, EdgeId e) {
  require_non_loop(g, e);
  const Edge& target = g.edge(e);
  ContractResult r;
  r.merged = target.u;  // endpoints are stored with u <= w
  r.removed = target.w;
  std::vector<VertexId> vertices;
  for (VertexId v : g.vertices()) {
    if (v != r.removed) vertices.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& x : g.edges()) {
    if (x.id == e) continue;
    Edge moved = x;
    if (moved.u == r.removed) moved.u = r.merged;
    if (moved.w == r.removed) moved.w = r.merged;
    edges.push_back(moved);
    r.id_map.emplace_back(x.id, x.id);
  }
  r.graph = MultiGraph::from_parts(std::move(vertices), std::move(edges));
  return r;
}

MultiGraph splitting_subgraph(const SplitResult& r) {
  return edge_global_subgraph(r.graph, r.splitting_edge);
}

MultiGraph edge_global_subgraph(const MultiGraph& g, EdgeId e) {
  require_non_loop(g, e);
  const Edge& x = g.edge(e);
  auto keep = merge_sets(neighbors(g, x.u), neighbors(g, x.w));
  keep = merge_sets(std::move(keep), {x.u, x.w});
  return induced_subgraph(g, keep);
}

MultiGraph edge_local_subgraph(const MultiGraph& g, EdgeId e) {
  require_non_loop(g, e);
  const Edge& x = g.edge(e);
  auto all = merge_sets(neighbors(g, x.u), neighbors(g, x.w));
  std::erase_if(all, [&](VertexId v) { return v == x.u || v == x.w; });
  return induced_subgraph(g, all);
}

FlexibilityVerdict is_type1_flexible(const MultiGraph& g, VertexId v) {
  FlexibilityVerdict verdict;
  verdict.evidence = local_subgraph(g, v);
  const std::size_t deg = degree(g, v);
  if (deg < 4) {
    verdict.finding = "degree " + std::to_string(deg) + " < 4";
    return verdict;
  }
  if (!is_connected(verdict.evidence)) {
    verdict.finding = verdict.evidence.vertex_count() == 0
                          ? "local subgraph is empty"
                          : "local subgraph has " + std::to_string(components(verdict.evidence).size()) +
                                " components";
    return verdict;
  }
  verdict.flexible = true;
  verdict.rule = FlexRule::kTypeI;
  verdict.finding = "local subgraph is connected";
  return verdict;
}

FlexibilityVerdict is_type2_flexible_split(const MultiGraph& g, const SplitSpec& spec, const SplitOptions& options) {
  if (!g.has_vertex(spec.vertex)) throw PreconditionError("vertex " + to_string(spec.vertex) + " is not in the graph");
  if (degree(g, spec.vertex) != 4) {
    throw PreconditionError("type-II splitting is defined only at degree 4; vertex " + to_string(spec.vertex) +
                            " has degree " + std::to_string(degree(g, spec.vertex)));
  }
  SplitResult r = split_vertex(g, spec, options);
  FlexibilityVerdict verdict;
  verdict.evidence = splitting_subgraph(r);
  if (is_cut_edge(verdict.evidence, r.splitting_edge)) {
    verdict.finding = "splitting edge is a cut-edge of the splitting subgraph";
    return verdict;
  }
  verdict.flexible = true;
  verdict.rule = FlexRule::kTypeII;
  verdict.finding = "splitting edge lies on a cycle of the splitting subgraph";
  return verdict;
}

std::size_t merged_degree(const MultiGraph& g, EdgeId e) {
  require_non_loop(g, e);
  const Edge& x = g.edge(e);
  return degree(g, x.u) + degree(g, x.w) - 2;
}

FlexibilityVerdict is_flexible_edge(const MultiGraph& g, EdgeId e) {
  const std::size_t merged = merged_degree(g, e);
  FlexibilityVerdict verdict;
  MultiGraph global = edge_global_subgraph(g, e);
  // Contracting an edge with a loop at an endpoint undoes a split that
  // assigns loop ends, which the preservation results do not cover.
  const Edge& target = g.edge(e);
  for (VertexId end : {target.u, target.w}) {
    for (EdgeId id : g.incident(end)) {
      if (g.edge(id).is_loop()) {
        verdict.finding = "loop " + to_string(id) + " at endpoint " + to_string(end);
        verdict.evidence = std::move(global);
        return verdict;
      }
    }
  }
  if (merged == 4 && !is_cut_edge(global, e)) {
    verdict.flexible = true;
    verdict.rule = FlexRule::kConditionI;
    verdict.evidence = std::move(global);
    verdict.finding = "merged degree 4 and edge lies on a cycle of the edge-global subgraph";
    return verdict;
  }
  MultiGraph local = edge_local_subgraph(g, e);
  if (merged >= 4 && is_connected(local)) {
    verdict.flexible = true;
    verdict.rule = FlexRule::kConditionII;
    verdict.evidence = std::move(local);
    verdict.finding = "merged degree " + std::to_string(merged) + " and edge-local subgraph is connected";
    return verdict;
  }
  verdict.finding = "merged degree " + std::to_string(merged);
  if (merged == 4) verdict.finding += "; edge is a cut-edge of the edge-global subgraph";
  if (merged >= 4) verdict.finding += "; edge-local subgraph is not connected";
  verdict.evidence = std::move(global);
  return verdict;
}

std::string split_spec_to_json(const SplitSpec& spec) {
  nlohmann::json j;
  j["vertex"] = spec.vertex.value;
  j["sideA"] = nlohmann::json::array();
  for (const EdgeEnd& end : spec.side_a) j["sideA"].push_back({end.edge.value, end.end});
  return j.dump();
}

SplitSpec split_spec_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    SplitSpec spec{VertexId{j.at("vertex").get<std::uint32_t>()}, {}};
    for (const auto& end : j.at("sideA")) {
      auto idx = end.at(1).get<std::uint32_t>();
      if (idx > 1) throw Error("edge-end index must be 0 or 1");
      spec.side_a.push_back({EdgeId{end.at(0).get<std::uint32_t>()}, static_cast<std::uint8_t>(idx)});
    }
    return spec;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(0, std::string("invalid split spec: ") + ex.what());
  }
}

}  // namespace upemb
