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

#include "upemb/reduce.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <thread>

#include "json.hpp"
#include "upemb/graphio.hpp"
#include "upemb/isomorphism.hpp"

namespace upemb {

namespace {

std::optional<std::pair<EdgeId, FlexRule>> first_flexible_edge(const MultiGraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    auto verdict = is_flexible_edge(g, e.id);
    if (verdict.flexible) return std::make_pair(e.id, verdict.rule);
  }
  return std::nullopt;
}

}  // namespace

Reduction flexible_weak_minor(const MultiGraph& g) {
  Reduction out{g, {}};
  out.trace.initial_order = g.vertex_count();
  while (auto next = first_flexible_edge(out.graph)) {
    ContractResult c = contract_edge(out.graph, next->first);
    out.trace.steps.push_back(ReductionStep{next->first, next->second, c.merged, c.removed, std::move(c.id_map)});
    out.graph = std::move(c.graph);
  }
  out.trace.final_order = out.graph.vertex_count();
  return out;
}

TraceCheck verify_trace(const MultiGraph& g, const ReductionTrace& t, const MultiGraph* expected_final) {
  TraceCheck check;
  if (g.vertex_count() != t.initial_order) {
    check.reason = "initial order " + std::to_string(g.vertex_count()) + " does not match trace";
    return check;
  }
  MultiGraph current = g;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const ReductionStep& step = t.steps[i];
    auto fail = [&](const std::string& why) {
      check.failed_step = i;
      check.reason = "step " + std::to_string(i) + ": " + why;
      return check;
    };
    if (!current.has_edge(step.edge) || current.edge(step.edge).is_loop()) {
      return fail("edge " + to_string(step.edge) + " is absent or a loop");
    }
    auto verdict = is_flexible_edge(current, step.edge);
    if (!verdict.flexible) return fail("edge " + to_string(step.edge) + " is not flexible");
    if (verdict.rule != step.rule) {
      return fail("recorded rule " + std::string(to_string(step.rule)) + " but edge satisfies " +
                  std::string(to_string(verdict.rule)));
    }
    ContractResult c = contract_edge(current, step.edge);
    if (c.merged != step.merged || c.removed != step.removed || c.id_map != step.id_map) {
      return fail("contraction result differs from the record");
    }
    current = std::move(c.graph);
  }
  if (current.vertex_count() != t.final_order) {
    check.reason = "final order " + std::to_string(current.vertex_count()) + " does not match trace";
    return check;
  }
  if (expected_final != nullptr && !(current == *expected_final)) {
    check.reason = "replayed graph differs from the expected final graph";
    return check;
  }
  check.ok = true;
  return check;
}

ReducedCheck check_reduced(const MultiGraph& g, const EnumerationGuard& guard) {
  ReducedCheck out;
  out.reduction = flexible_weak_minor(g);
  out.original_order = g.vertex_count();
  out.reduced_order = out.reduction.graph.vertex_count();
  out.report = max_genus(out.reduction.graph, GenusOptions{GenusMode::kExact, guard, 0, 0});
  const double before = count_spanning_trees(g);
  const double after = count_spanning_trees(out.reduction.graph);
  if (after > 0) out.tree_count_ratio = before / after;
  return out;
}

OrderExploration explore_reduction_orders(const MultiGraph& g, std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices) {
    throw PreconditionError("order exploration is limited to " + std::to_string(max_vertices) + " vertices");
  }
  OrderExploration out;
  std::set<std::string> seen;
  std::map<std::string, std::size_t> finals;
  std::vector<MultiGraph> stack{g};
  seen.insert(canonical_certificate(g));
  while (!stack.empty()) {
    MultiGraph current = std::move(stack.back());
    stack.pop_back();
    ++out.states_visited;
    bool any = false;
    for (const Edge& e : current.edges()) {
      if (e.is_loop() || !is_flexible_edge(current, e.id).flexible) continue;
      any = true;
      MultiGraph next = contract_edge(current, e.id).graph;
      if (seen.insert(canonical_certificate(next)).second) stack.push_back(std::move(next));
    }
    if (!any) finals.emplace(canonical_certificate(current), current.vertex_count());
  }
  out.irreducible.assign(finals.begin(), finals.end());
  return out;
}

namespace {

struct Candidate {
  MultiGraph graph;
  SplitSpec split;
  FlexRule rule;
  EdgeId splitting_edge;
  bool verified;
  std::string certificate;
};

std::vector<Candidate> expand(const MultiGraph& g, const FamilyOptions& options) {
  std::vector<Candidate> out;
  if (g.vertex_count() + 1 > options.max_vertices) return out;
  const SplitOptions split_options{true, true};
  for (VertexId v : g.vertices()) {
    const std::size_t deg = degree(g, v);
    if (deg < 4) continue;
    const bool type1 = options.type1 && is_type1_flexible(g, v).flexible;
    const bool maybe_type2 = options.type2 && deg == 4;
    if (!type1 && !maybe_type2) continue;
    auto ends = ends_at(g, v);
    // The first end always goes to side A, so mirror-image splits are skipped.
    const std::size_t rest = ends.size() - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest); ++mask) {
      SplitSpec spec{v, {ends[0]}};
      for (std::size_t i = 0; i < rest; ++i) {
        if (mask & (std::uint64_t{1} << i)) spec.side_a.push_back(ends[i + 1]);
      }
      if (spec.side_a.size() < 2 || ends.size() - spec.side_a.size() < 2) continue;
      FlexRule rule = FlexRule::kNone;
      if (type1) {
        rule = FlexRule::kTypeI;
      } else if (is_type2_flexible_split(g, spec, split_options).flexible) {
        rule = FlexRule::kTypeII;
      }
      if (rule == FlexRule::kNone) continue;
      SplitResult r = split_vertex(g, spec, split_options);
      Candidate c{std::move(r.graph), spec, rule, r.splitting_edge, false, {}};
      c.verified = is_upper_embeddable(c.graph, options.guard);
      c.certificate = c.graph.vertex_count() <= options.dedup_max_vertices ? canonical_certificate(c.graph)
                                                                            : "mg1:" + emit_mg1(c.graph);
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

Family generate_family(const MultiGraph& seed, const FamilyOptions& options) {
  if (!is_upper_embeddable(seed, options.guard)) throw PreconditionError("seed graph is not upper embeddable");
  Family family;
  std::set<std::string> seen;
  auto certificate_of = [&](const MultiGraph& g) {
    return g.vertex_count() <= options.dedup_max_vertices ? canonical_certificate(g) : "mg1:" + emit_mg1(g);
  };
  FamilyNode root{seed, std::nullopt, std::nullopt, FlexRule::kNone, std::nullopt, 0, certificate_of(seed)};
  seen.insert(root.certificate);
  family.nodes.push_back(std::move(root));

  std::vector<std::size_t> frontier{0};
  std::size_t depth = 0;
  while (!frontier.empty() && !family.budget_exhausted) {
    ++depth;
    std::vector<std::vector<Candidate>> expanded(frontier.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < frontier.size(); i = next++) {
        expanded[i] = expand(family.nodes[frontier[i]].graph, options);
      }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, frontier.size()));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    std::vector<std::size_t> next_frontier;
    for (std::size_t i = 0; i < frontier.size() && !family.budget_exhausted; ++i) {
      for (Candidate& c : expanded[i]) {
        if (!c.verified) {
          ++family.rejected;
          continue;
        }
        if (!c.certificate.starts_with("mg1:") && !seen.insert(c.certificate).second) continue;
        if (family.nodes.size() >= options.max_graphs) {
          family.budget_exhausted = true;
          break;
        }
        next_frontier.push_back(family.nodes.size());
        family.nodes.push_back(FamilyNode{std::move(c.graph), frontier[i], std::move(c.split), c.rule,
                                          c.splitting_edge, depth, std::move(c.certificate)});
      }
    }
    frontier = std::move(next_frontier);
  }

  // Canonical output order; parents always precede children.
  std::vector<std::size_t> order(family.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = family.nodes[a];
    const auto& y = family.nodes[b];
    return std::tie(x.depth, x.certificate) < std::tie(y.depth, y.certificate);
  });
  std::vector<std::size_t> where(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) where[order[i]] = i;
  std::vector<FamilyNode> sorted;
  sorted.reserve(order.size());
  for (std::size_t idx : order) {
    FamilyNode n = std::move(family.nodes[idx]);
    if (n.parent) n.parent = where[*n.parent];
    sorted.push_back(std::move(n));
  }
  family.nodes = std::move(sorted);
  return family;
}

std::string trace_to_json(const ReductionTrace& t) {
  nlohmann::json j;
  j["initialOrder"] = t.initial_order;
  j["finalOrder"] = t.final_order;
  j["steps"] = nlohmann::json::array();
  for (const ReductionStep& s : t.steps) {
    nlohmann::json map = nlohmann::json::array();
    for (auto [from, to] : s.id_map) map.push_back({from.value, to.value});
    j["steps"].push_back({{"edge", s.edge.value},
                          {"rule", std::string(to_string(s.rule))},
                          {"merged", s.merged.value},
                          {"removed", s.removed.value},
                          {"idMap", std::move(map)}});
  }
  return j.dump(2) + "\n";
}

ReductionTrace trace_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    ReductionTrace t;
    t.initial_order = j.at("initialOrder").get<std::size_t>();
    t.final_order = j.at("finalOrder").get<std::size_t>();
    for (const auto& s : j.at("steps")) {
      ReductionStep step;
      step.edge = EdgeId{s.at("edge").get<std::uint32_t>()};
      step.rule = flex_rule_from_string(s.at("rule").get<std::string>());
      step.merged = VertexId{s.at("merged").get<std::uint32_t>()};
      step.removed = VertexId{s.at("removed").get<std::uint32_t>()};
      for (const auto& pair : s.at("idMap")) {
        step.id_map.emplace_back(EdgeId{pair.at(0).get<std::uint32_t>()}, EdgeId{pair.at(1).get<std::uint32_t>()});
      }
      t.steps.push_back(std::move(step));
    }
    return t;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(0, std::string("invalid trace: ") + ex.what());
  }
}

namespace {

std::string member_file(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "member_%04zu.mg1", i);
  return buf;
}

}  // namespace

std::string family_index_json(const Family& f) {
  nlohmann::json j;
  j["budgetExhausted"] = f.budget_exhausted;
  j["rejected"] = f.rejected;
  j["members"] = nlohmann::json::array();
  for (std::size_t i = 0; i < f.nodes.size(); ++i) {
    const FamilyNode& n = f.nodes[i];
    nlohmann::json m{{"id", i},
                     {"file", member_file(i)},
                     {"depth", n.depth},
                     {"vertices", n.graph.vertex_count()},
                     {"edges", n.graph.edge_count()},
                     {"rule", std::string(to_string(n.rule))},
                     {"certificate", n.certificate.starts_with("mg1:") ? "" : n.certificate}};
    m["parent"] = n.parent ? nlohmann::json(*n.parent) : nlohmann::json(nullptr);
    m["split"] = n.split ? nlohmann::json::parse(split_spec_to_json(*n.split)) : nlohmann::json(nullptr);
    m["splittingEdge"] = n.splitting_edge ? nlohmann::json(n.splitting_edge->value) : nlohmann::json(nullptr);
    j["members"].push_back(std::move(m));
  }
  return j.dump(2) + "\n";
}

void write_family_directory(const Family& f, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < f.nodes.size(); ++i) {
    std::ofstream(dir / member_file(i), std::ios::binary) << emit_mg1(f.nodes[i].graph);
  }
  std::ofstream(dir / "index.json", std::ios::binary) << family_index_json(f);
}

}  // namespace upemb
