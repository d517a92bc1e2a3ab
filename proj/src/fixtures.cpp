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

#include <charconv>
#include <functional>
#include <map>
#include <optional>

#include "upemb/graphio.hpp"

// Ids of the named fixtures are chosen so that the split and contraction
// relationships between them hold exactly under the id conventions of the transforms module: the kept
// side of a split retains the old vertex id, the new side and the splitting
// edge take the next free ids.

namespace upemb::fixtures {

namespace {

using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

LabeledGraph labeled(std::size_t n, const Pairs& edges, std::vector<std::string> names) {
  LabeledGraph out{MultiGraph::build(n, edges), {}};
  for (std::size_t i = 0; i < names.size(); ++i) {
    out.labels.emplace_back(names[i], VertexId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

// fig1_g: K4 as a triangle l, r, t with a centre vertex c.
LabeledGraph fig1() {
  return labeled(4, {{0, 1}, {0, 3}, {0, 2}, {3, 2}, {3, 1}, {1, 2}}, {"l", "r", "t", "c"});
}

// fig2_g1: fig1_g with the centre-top edge e3 contracted into t. The edge ids
// are those that survive the contraction.
LabeledGraph fig2() {
  std::vector<Edge> edges{{EdgeId{0}, VertexId{0}, VertexId{1}}, {EdgeId{1}, VertexId{0}, VertexId{2}},
                          {EdgeId{2}, VertexId{0}, VertexId{2}}, {EdgeId{4}, VertexId{2}, VertexId{1}},
                          {EdgeId{5}, VertexId{1}, VertexId{2}}};
  return LabeledGraph{MultiGraph::from_parts({VertexId{0}, VertexId{1}, VertexId{2}}, std::move(edges)),
                      {{"l", VertexId{0}}, {"r", VertexId{1}}, {"t", VertexId{2}}}};
}

// fig3_g2: a single vertex with three loops.
LabeledGraph fig3() { return labeled(1, {{0, 0}, {0, 0}, {0, 0}}, {"c"}); }

const std::vector<std::string> kFig4Names{"l1", "l2", "l3", "l4", "r1", "r2", "r3", "r4", "a",
                                          "b",  "c",  "d",  "e",  "f",  "g",  "h",  "v"};

// fig4_g: two ladders joined through the degree-4 vertex v.
Pairs fig4_edges() {
  enum : std::uint32_t { l1, l2, l3, l4, r1, r2, r3, r4, a, b, c, d, e, f, g, h, v };
  return {{l1, l2}, {l2, l3}, {l3, l4}, {l1, a}, {a, b},  {b, v},  {l4, d},  {d, c}, {c, v},
          {l2, a},  {l3, d},  {b, c},   {l1, r1}, {r1, r2}, {r2, r3}, {r3, r4}, {l4, r4}, {r1, e},
          {e, f},   {f, v},   {r4, h},  {h, g},  {g, v},  {f, g},  {e, r2},  {h, r3}};
}

// fig5_g1, fig6_g2: v split into v' (keeps id 16) and v'' (id 17); the
// splitting edge is edge 26.
LabeledGraph fig4_split(std::initializer_list<std::uint32_t> moved_to_double_prime) {
  Pairs edges = fig4_edges();
  for (std::uint32_t idx : moved_to_double_prime) edges[idx].second = 17;
  edges.emplace_back(16, 17);
  auto names = kFig4Names;
  names.back() = "v'";
  names.push_back("v''");
  return labeled(18, edges, names);
}

// fig7_g1: two triangles joined by a bridge.
Pairs fig7_edges() {
  enum : std::uint32_t { lt, lb, m1, m2, rt, rb };
  return {{m1, m2}, {m1, lt}, {m1, lb}, {m2, rt}, {m2, rb}, {lt, lb}, {rt, rb}};
}
const std::vector<std::string> kFig7Names{"lt", "lb", "m1", "m2", "rt", "rb"};

// fig23_g: a carries a loop; b has degree 5; d and e are joined three times.
Pairs fig23_edges() {
  enum : std::uint32_t { a, b, d, e, t1, t2 };
  return {{a, a}, {a, d}, {a, b}, {d, e}, {d, e}, {d, e}, {e, b}, {d, b}, {b, t1}, {b, t2}, {t1, t2}};
}

LabeledGraph from_name(std::string_view name) {
  if (name == "fig1_g") return fig1();
  if (name == "fig2_g1") return fig2();
  if (name == "fig3_g2") return fig3();
  if (name == "fig4_g") return labeled(17, fig4_edges(), kFig4Names);
  // Edge indices in fig4_edges(): 5 = bv, 8 = cv, 19 = fv, 22 = gv.
  if (name == "fig5_g1") return fig4_split({8, 22});
  if (name == "fig6_g2") return fig4_split({19, 22});
  if (name == "fig7_g1") return labeled(6, fig7_edges(), kFig7Names);
  if (name == "fig8_g") {
    Pairs edges = fig7_edges();
    edges.emplace_back(0, 3);
    return labeled(6, edges, kFig7Names);
  }
  if (name == "fig23_g") return labeled(6, fig23_edges(), {"a", "b", "d", "e", "t1", "t2"});
  if (name == "fig24_gstar") {
    Pairs edges = fig23_edges();
    edges[6].second = 6;  // e-b''
    edges[7].second = 6;  // d-b''
    edges.emplace_back(1, 6);
    return labeled(7, edges, {"a", "b'", "d", "e", "t1", "t2", "b''"});
  }
  if (name == "theta") return LabeledGraph{theta(), {}};
  if (name == "k4") return LabeledGraph{complete(4), {}};

  auto parametric = [&](std::string_view prefix, const std::function<MultiGraph(std::size_t)>& make)
      -> std::optional<LabeledGraph> {
    if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
    std::size_t n = 0;
    auto rest = name.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) return std::nullopt;
    return LabeledGraph{make(n), {}};
  };
  if (auto g = parametric("bouquet", bouquet)) return *g;
  if (auto g = parametric("cycle", cycle)) return *g;
  if (auto g = parametric("wheel", wheel)) return *g;
  if (auto g = parametric("k", complete)) return *g;
  throw GraphError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace

MultiGraph bouquet(std::size_t n) { return MultiGraph::build(1, Pairs(n, {0, 0})); }

MultiGraph theta() { return MultiGraph::build(2, {{0, 1}, {0, 1}, {0, 1}}); }

MultiGraph complete(std::size_t n) {
  Pairs edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return MultiGraph::build(n, edges);
}

MultiGraph cycle(std::size_t n) {
  Pairs edges;
  for (std::uint32_t i = 0; i < n; ++i) edges.emplace_back(i, static_cast<std::uint32_t>((i + 1) % n));
  return MultiGraph::build(n, edges);
}

MultiGraph path(std::size_t n) {
  Pairs edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return MultiGraph::build(n, edges);
}

MultiGraph wheel(std::size_t n) {
  Pairs edges;
  for (std::uint32_t i = 1; i <= n; ++i) edges.emplace_back(0, i);
  for (std::uint32_t i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
  return MultiGraph::build(n + 1, edges);
}

LabeledGraph named(std::string_view name) { return from_name(name); }

std::vector<std::string> figure_names() {
  return {"fig1_g", "fig2_g1", "fig3_g2", "fig4_g",  "fig5_g1",
          "fig6_g2", "fig7_g1", "fig8_g",  "fig23_g", "fig24_gstar"};
}

}  // namespace upemb::fixtures
