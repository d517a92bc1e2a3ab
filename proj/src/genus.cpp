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

#include "upemb/genus.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "disjoint_sets.hpp"
#include "upemb/graphio.hpp"

namespace upemb {

namespace {

// Edges over dense vertex indices, in edge-id order.
struct DenseGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  std::vector<EdgeId> ids;

  explicit DenseGraph(const MultiGraph& g) : n(g.vertex_count()) {
    for (const Edge& e : g.edges()) {
      ends.emplace_back(g.vertex_index(e.u), g.vertex_index(e.w));
      ids.push_back(e.id);
    }
  }
  [[nodiscard]] std::size_t m() const { return ends.size(); }
};

// Odd co-tree components for a tree given as a membership mask.
class ParityCounter {
 public:
  explicit ParityCounter(const DenseGraph& g) : g_(g), counts_(g.n) {}

  std::size_t odd_components(const std::vector<char>& in_tree) {
    detail::DisjointSets sets(g_.n);
    for (std::size_t i = 0; i < g_.m(); ++i) {
      if (!in_tree[i]) sets.unite(g_.ends[i].first, g_.ends[i].second);
    }
    std::fill(counts_.begin(), counts_.end(), 0);
    for (std::size_t i = 0; i < g_.m(); ++i) {
      if (!in_tree[i]) ++counts_[sets.find(g_.ends[i].first)];
    }
    std::size_t odd = 0;
    for (std::size_t c : counts_) odd += c % 2;
    return odd;
  }

 private:
  const DenseGraph& g_;
  std::vector<std::size_t> counts_;
};

class TreeEnumerator {
 public:
  TreeEnumerator(const DenseGraph& g, const std::function<bool(const std::vector<std::size_t>&)>& visit)
      : g_(g), visit_(visit) {
    for (std::size_t i = 0; i < g.m(); ++i) {
      if (g.ends[i].first != g.ends[i].second) candidates_.push_back(i);
    }
  }

  void run() {
    if (g_.n == 0) return;
    detail::DisjointSets sets(g_.n);
    recurse(0, sets);
  }

 private:
  bool recurse(std::size_t k, detail::DisjointSets& sets) {
    if (chosen_.size() + 1 == g_.n) return visit_(chosen_);
    if (k == candidates_.size()) return true;
    auto [a, b] = g_.ends[candidates_[k]];
    if (sets.find(a) == sets.find(b)) return recurse(k + 1, sets);

    {
      detail::DisjointSets with = sets;
      with.unite(a, b);
      chosen_.push_back(candidates_[k]);
      if (!recurse(k + 1, with)) return false;
      chosen_.pop_back();
    }
    // Skipping edge k is only possible if it is not a bridge of what remains.
    detail::DisjointSets rest = sets;
    std::size_t parts = 0;
    for (std::size_t j = k + 1; j < candidates_.size(); ++j) {
      rest.unite(g_.ends[candidates_[j]].first, g_.ends[candidates_[j]].second);
    }
    for (std::size_t i = 0; i < g_.n; ++i) parts += rest.find(i) == i ? 1 : 0;
    if (parts != 1) return true;
    return recurse(k + 1, sets);
  }

  const DenseGraph& g_;
  const std::function<bool(const std::vector<std::size_t>&)>& visit_;
  std::vector<std::size_t> candidates_;
  std::vector<std::size_t> chosen_;
};

SpanningTree tree_from_indices(const DenseGraph& g, const std::vector<std::size_t>& idx) {
  SpanningTree t;
  t.edges.reserve(idx.size());
  for (std::size_t i : idx) t.edges.push_back(g.ids[i]);
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

std::vector<char> mask_of(const DenseGraph& g, const std::vector<std::size_t>& idx) {
  std::vector<char> mask(g.m(), 0);
  for (std::size_t i : idx) mask[i] = 1;
  return mask;
}

void require_connected(const MultiGraph& g) {
  if (!is_connected(g)) throw GraphError("graph is not connected");
}

// Edge indices along the tree path from `from` to `to`, ordered from `from`.
std::vector<std::size_t> tree_path(const DenseGraph& g, const std::vector<char>& in_tree, std::size_t from,
                                   std::size_t to) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.n);
  for (std::size_t i = 0; i < g.m(); ++i) {
    if (!in_tree[i]) continue;
    auto [a, b] = g.ends[i];
    adj[a].emplace_back(b, i);
    adj[b].emplace_back(a, i);
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> via(g.n, kNone), prev(g.n, kNone);
  std::vector<std::size_t> queue{from};
  std::vector<char> seen(g.n, 0);
  seen[from] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t x = queue[head];
    for (auto [y, e] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      via[y] = e;
      prev[y] = x;
      queue.push_back(y);
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t x = to; x != from; x = prev[x]) path.push_back(via[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

bool SpanningTree::contains(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }

void EnumerationGuard::check(const MultiGraph& g) const {
  if (!unlimited && g.edge_count() > max_edges) {
    throw GuardExceeded("graph has " + std::to_string(g.edge_count()) +
                        " edges, above the enumeration guard of " + std::to_string(max_edges));
  }
}

void for_each_spanning_tree(const MultiGraph& g, const std::function<bool(const SpanningTree&)>& visit,
                            const EnumerationGuard& guard) {
  require_connected(g);
  guard.check(g);
  DenseGraph dense(g);
  std::function<bool(const std::vector<std::size_t>&)> leaf = [&](const std::vector<std::size_t>& idx) {
    return visit(tree_from_indices(dense, idx));
  };
  TreeEnumerator(dense, leaf).run();
}

std::vector<SpanningTree> spanning_trees(const MultiGraph& g, const EnumerationGuard& guard) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(
      g,
      [&](const SpanningTree& t) {
        out.push_back(t);
        return true;
      },
      guard);
  return out;
}

double count_spanning_trees(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return n == 1 ? 1.0 : 0.0;
  // Laplacian with the last row and column removed.
  std::vector<std::vector<long double>> lap(n - 1, std::vector<long double>(n - 1, 0.0L));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    std::size_t a = g.vertex_index(e.u);
    std::size_t b = g.vertex_index(e.w);
    if (a + 1 < n) lap[a][a] += 1;
    if (b + 1 < n) lap[b][b] += 1;
    if (a + 1 < n && b + 1 < n) {
      lap[a][b] -= 1;
      lap[b][a] -= 1;
    }
  }
  long double det = 1.0L;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r + 1 < n; ++r) {
      if (std::abs(lap[r][col]) > std::abs(lap[pivot][col])) pivot = r;
    }
    if (std::abs(lap[pivot][col]) < 1e-12L) return 0.0;
    if (pivot != col) {
      std::swap(lap[pivot], lap[col]);
      det = -det;
    }
    det *= lap[col][col];
    for (std::size_t r = col + 1; r + 1 < n; ++r) {
      long double f = lap[r][col] / lap[col][col];
      for (std::size_t c = col; c + 1 < n; ++c) lap[r][c] -= f * lap[col][c];
    }
  }
  return static_cast<double>(std::round(det));
}

bool is_spanning_tree(const MultiGraph& g, const SpanningTree& t) {
  if (g.vertex_count() == 0 || t.edges.size() + 1 != g.vertex_count()) return false;
  if (!std::is_sorted(t.edges.begin(), t.edges.end())) return false;
  if (std::adjacent_find(t.edges.begin(), t.edges.end()) != t.edges.end()) return false;
  detail::DisjointSets sets(g.vertex_count());
  for (EdgeId id : t.edges) {
    if (!g.has_edge(id)) return false;
    const Edge& e = g.edge(id);
    if (!sets.unite(g.vertex_index(e.u), g.vertex_index(e.w))) return false;
  }
  return true;
}

DeficiencyReport deficiency(const MultiGraph& g, const SpanningTree& t) {
  if (!is_spanning_tree(g, t)) throw PreconditionError("edge set is not a spanning tree of the graph");
  DeficiencyReport report{t, 0, {}};
  for (const Component& c : components(remove_edges(g, t.edges)).components) {
    if (c.edge_count() == 0) continue;
    report.component_edge_counts.push_back(c.edge_count());
    report.xi_of_tree += c.edge_count() % 2;
  }
  return report;
}

XiResult xi(const MultiGraph& g, const EnumerationGuard& guard) {
  require_connected(g);
  guard.check(g);
  const std::size_t floor = betti(g) % 2;
  DenseGraph dense(g);
  ParityCounter parity(dense);
  std::optional<XiResult> best;
  std::function<bool(const std::vector<std::size_t>&)> leaf = [&](const std::vector<std::size_t>& idx) {
    std::size_t value = parity.odd_components(mask_of(dense, idx));
    if (!best || value < best->xi) best = XiResult{value, tree_from_indices(dense, idx)};
    return best->xi > floor;
  };
  TreeEnumerator(dense, leaf).run();
  return *best;
}

std::optional<SpanningTree> find_splitting_tree(const MultiGraph& g, const EnumerationGuard& guard) {
  require_connected(g);
  guard.check(g);
  DenseGraph dense(g);
  ParityCounter parity(dense);
  std::optional<SpanningTree> found;
  std::function<bool(const std::vector<std::size_t>&)> leaf = [&](const std::vector<std::size_t>& idx) {
    if (parity.odd_components(mask_of(dense, idx)) > 1) return true;
    found = tree_from_indices(dense, idx);
    return false;
  };
  TreeEnumerator(dense, leaf).run();
  return found;
}

bool is_upper_embeddable(const MultiGraph& g, const EnumerationGuard& guard) {
  return find_splitting_tree(g, guard).has_value();
}

GenusReport max_genus(const MultiGraph& g, const GenusOptions& options) {
  require_connected(g);
  GenusReport report;
  report.betti = betti(g);
  report.mode = options.mode;
  XiResult r = options.mode == GenusMode::kExact ? xi(g, options.guard)
                                                 : xi_heuristic(g, options.effort, options.seed);
  report.xi = r.xi;
  report.max_genus = (report.betti - r.xi) / 2;
  report.upper_embeddable = r.xi <= 1;
  if (report.upper_embeddable) report.witness = r.witness;
  return report;
}

SpanningTree retree_around_vertex(const MultiGraph& g, const SpanningTree& t, VertexId v) {
  if (!g.has_vertex(v)) throw PreconditionError("vertex " + to_string(v) + " is not in the graph");
  if (!is_spanning_tree(g, t)) throw PreconditionError("input edge set is not a spanning tree");
  if (deficiency(g, t).xi_of_tree > 1) throw PreconditionError("input tree is not a splitting tree");
  if (degree(g, v) < 3) throw PreconditionError("vertex " + to_string(v) + " has degree below 3");
  for (EdgeId id : g.incident(v)) {
    if (g.edge(id).is_loop()) throw PreconditionError("vertex " + to_string(v) + " carries a loop");
  }
  if (!is_connected(local_subgraph(g, v))) {
    throw PreconditionError("local subgraph at vertex " + to_string(v) + " is not connected");
  }

  DenseGraph dense(g);
  std::vector<char> in_tree(dense.m(), 0);
  for (EdgeId id : t.edges) in_tree[g.edge_index(id)] = 1;
  const std::size_t center = g.vertex_index(v);

  for (VertexId u : neighbors(g, v)) {
    const std::size_t target = g.vertex_index(u);
    std::optional<std::size_t> selected;
    for (EdgeId id : g.incident(v)) {
      if (g.edge(id).other(v) == u) {
        selected = g.edge_index(id);
        break;
      }
    }
    if (in_tree[*selected]) continue;
    auto path = tree_path(dense, in_tree, center, target);
    in_tree[path.back()] = 0;
    in_tree[*selected] = 1;
  }

  SpanningTree out;
  for (std::size_t i = 0; i < dense.m(); ++i) {
    if (in_tree[i]) out.edges.push_back(dense.ids[i]);
  }
  return out;
}

XiResult xi_heuristic(const MultiGraph& g, std::size_t effort, std::uint64_t seed) {
  require_connected(g);
  DenseGraph dense(g);
  ParityCounter parity(dense);
  std::mt19937_64 rng(seed);

  std::vector<std::size_t> order(dense.m());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> in_tree(dense.m(), 0);
  detail::DisjointSets sets(dense.n);
  for (std::size_t i : order) {
    if (sets.unite(dense.ends[i].first, dense.ends[i].second)) in_tree[i] = 1;
  }

  const std::size_t floor = betti(g) % 2;
  std::size_t current = parity.odd_components(in_tree);
  std::size_t best_value = current;
  std::vector<char> best = in_tree;

  std::vector<std::size_t> cotree;
  for (std::size_t i = 0; i < dense.m(); ++i) {
    if (dense.ends[i].first != dense.ends[i].second) cotree.push_back(i);
  }
  for (std::size_t step = 0; step < effort && best_value > floor; ++step) {
    std::vector<std::size_t> out_edges;
    for (std::size_t i : cotree) {
      if (!in_tree[i]) out_edges.push_back(i);
    }
    if (out_edges.empty()) break;
    std::size_t entering = out_edges[std::uniform_int_distribution<std::size_t>(0, out_edges.size() - 1)(rng)];
    auto cyc = tree_path(dense, in_tree, dense.ends[entering].first, dense.ends[entering].second);
    std::size_t leaving = cyc[std::uniform_int_distribution<std::size_t>(0, cyc.size() - 1)(rng)];
    in_tree[entering] = 1;
    in_tree[leaving] = 0;
    std::size_t value = parity.odd_components(in_tree);
    if (value <= current) {
      current = value;
      if (value < best_value) {
        best_value = value;
        best = in_tree;
      }
    } else {
      in_tree[entering] = 0;
      in_tree[leaving] = 1;
    }
  }

  XiResult r{best_value, {}};
  for (std::size_t i = 0; i < dense.m(); ++i) {
    if (best[i]) r.witness.edges.push_back(dense.ids[i]);
  }
  return r;
}

std::string emit_witness(const MultiGraph& g, const SpanningTree& t) {
  std::string out = emit_mg1(g) + "# splitting tree\n";
  for (EdgeId id : t.edges) out += "t " + to_string(id) + "\n";
  return out;
}

std::pair<MultiGraph, SpanningTree> parse_witness(std::string_view text) {
  std::string body;
  SpanningTree t;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 1;
    if (line.starts_with("t ")) {
      auto tok = line.substr(2);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos) {
        throw ParseError(line_no, "expected 't <edge-id>'");
      }
      t.edges.emplace_back(static_cast<std::uint32_t>(std::stoul(std::string(tok))));
      body += "# tree edge\n";  // keeps line numbers aligned for MG1 errors
    } else {
      body.append(line);
      body += '\n';
    }
  }
  MultiGraph g = parse_mg1(body);
  std::sort(t.edges.begin(), t.edges.end());
  if (!is_spanning_tree(g, t)) throw ParseError(0, "witness edges do not form a spanning tree");
  return {std::move(g), std::move(t)};
}

std::string tree_to_json(const SpanningTree& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    if (i) out += ",";
    out += to_string(t.edges[i]);
  }
  return out + "]";
}

}  // namespace upemb
