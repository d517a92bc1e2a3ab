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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "support.hpp"
#include "upemb/genus.hpp"
#include "upemb/graphio.hpp"
#include "upemb/isomorphism.hpp"
#include "upemb/reduce.hpp"
#include "upemb/transforms.hpp"

namespace {

using namespace upemb;
using namespace upemb::testing;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::size_t violations = 0;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first violation: " << what << "; ";
    violations += !ok;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::string> all_fixture_names() {
  std::vector<std::string> names = fixtures::figure_names();
  for (const char* extra : {"theta", "k4", "bouquet1", "bouquet4", "bouquet7", "cycle5", "wheel5", "k5", "k6"}) {
    names.emplace_back(extra);
  }
  return names;
}

void bouquet_law(Outcome& o) {
  auto t0 = Clock::now();
  for (std::size_t n = 1; n <= 8; ++n) {
    GenusReport r = max_genus(fixtures::bouquet(n));
    o.require(r.max_genus == n / 2, "gamma_M(B_" + std::to_string(n) + ")");
    o.require(r.xi == n % 2, "xi(B_" + std::to_string(n) + ")");
  }
  double s = seconds_since(t0);
  o.require(s < 1.0, "time");
  o.detail << "n=1..8 exact, " << s << " s";
}

void figure_verdicts(Outcome& o) {
  auto t0 = Clock::now();
  const std::pair<const char*, bool> expected[] = {{"fig8_g", true},  {"fig7_g1", false}, {"fig5_g1", true},
                                                   {"fig6_g2", false}, {"fig23_g", true}, {"fig24_gstar", false}};
  for (auto [name, ue] : expected) {
    o.require(is_upper_embeddable(fixture(name)) == ue, name);
    o.detail << name << "=" << (ue ? "UE" : "not-UE") << " ";
  }
  double s = seconds_since(t0);
  o.require(s < 10.0, "time");
  o.detail << s << " s";
}

void deficiency_consistency(Outcome& o) {
  std::size_t checked = 0;
  auto check = [&](const MultiGraph& g, bool with_oracle, const std::string& what) {
    XiResult x = xi(g);
    bool ue = is_upper_embeddable(g);
    bool found = find_splitting_tree(g).has_value();
    o.require(x.xi % 2 == betti(g) % 2, what + " parity");
    o.require(ue == (x.xi <= 1), what + " ue vs xi");
    o.require(ue == found, what + " ue vs splitting tree");
    o.require(deficiency(g, x.witness).xi_of_tree == x.xi, what + " witness");
    if (with_oracle) o.require(x.xi == oracle_xi(g), what + " oracle xi");
    ++checked;
  };
  for (const std::string& name : all_fixture_names()) check(fixture(name.c_str()), false, name);
  Rng rng(1001);
  for (int i = 0; i < 500; ++i) check(random_graph(rng), true, "random #" + std::to_string(i));
  o.detail << checked << " graphs, " << o.violations << " violations";
}

// Random graph with a vertex of degree >= 4 and no loop at it, for which
// `accept` holds; returns the vertex.
std::pair<MultiGraph, VertexId> graph_with_vertex(Rng& rng, const RandomGraphSpec& spec,
                                                  const std::function<bool(const MultiGraph&, VertexId)>& accept) {
  for (;;) {
    MultiGraph g = random_graph(rng, spec);
    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    std::shuffle(vs.begin(), vs.end(), rng);
    for (VertexId v : vs) {
      if (degree(g, v) >= 4 && !has_loop_at(g, v) && accept(g, v)) return {g, v};
    }
  }
}

void type1_preservation(Outcome& o) {
  Rng rng(2001);
  std::size_t ue = 0;
  RandomGraphSpec spec{3, 7, 12, true, true, true};
  for (int i = 0; i < 200; ++i) {
    auto [g, v] = graph_with_vertex(rng, spec, [](const MultiGraph& h, VertexId x) {
      return is_type1_flexible(h, x).flexible;
    });
    SplitSpec s = *random_split(rng, g, v, false);
    SplitResult r = split_vertex(g, s);
    bool before = is_upper_embeddable(g);
    ue += before;
    o.require(before == is_upper_embeddable(r.graph), "case " + std::to_string(i));
  }
  o.detail << "200 type-I splits (" << ue << " UE, " << 200 - ue << " not UE)";
}

void type2_preservation(Outcome& o) {
  Rng rng(3001);
  RandomGraphSpec spec{3, 7, 12, true, true, true};
  auto deg4 = [](const MultiGraph& h, VertexId x) { return degree(h, x) == 4; };
  std::size_t ue = 0, cut_cases = 0, cut_changed = 0, noncut = 0;
  while (noncut < 200 || cut_cases < 50) {
    auto [g, v] = graph_with_vertex(rng, spec, deg4);
    SplitSpec s = *random_split(rng, g, v, true);
    SplitResult r = split_vertex(g, s);
    bool flexible = is_type2_flexible_split(g, s).flexible;
    bool cut = oracle_is_cut_edge(splitting_subgraph(r), r.splitting_edge);
    o.require(flexible == !cut, "type-II predicate vs cut-edge oracle");
    bool before = is_upper_embeddable(g);
    bool after = is_upper_embeddable(r.graph);
    if (!cut && noncut < 200) {
      ++noncut;
      ue += before;
      o.require(before == after, "non-cut case " + std::to_string(noncut));
    } else if (cut && cut_cases < 50) {
      ++cut_cases;
      cut_changed += before != after;
    }
  }
  o.detail << "200 non-cut splits (" << ue << " UE) preserved; 50 cut-edge splits reported: " << cut_changed
           << " changed verdict";
}

void monotonicity(Outcome& o) {
  Rng rng(4001);
  std::size_t graphs = 0, contractions = 0;
  while (graphs < 300) {
    MultiGraph g = random_graph(rng);
    if (!is_upper_embeddable(g)) continue;
    ++graphs;
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) continue;
      ++contractions;
      o.require(is_upper_embeddable(contract_edge(g, e.id).graph), "contraction");
    }
  }
  o.detail << graphs << " UE graphs, " << contractions << " contractions";
}

void reduction_soundness(Outcome& o) {
  std::size_t count = 0, steps = 0, shrunk = 0;
  auto check = [&](const MultiGraph& g, const std::string& what) {
    ReducedCheck c = check_reduced(g);
    o.require(c.report.upper_embeddable == is_upper_embeddable(g), what + " verdict");
    o.require(c.reduction.trace.steps.size() + 1 <= std::max<std::size_t>(g.vertex_count(), 1), what + " steps");
    o.require(static_cast<bool>(verify_trace(g, c.reduction.trace, &c.reduction.graph)), what + " trace");
    steps += c.reduction.trace.steps.size();
    shrunk += c.reduced_order < c.original_order;
    ++count;
  };
  for (const std::string& name : all_fixture_names()) check(fixture(name.c_str()), name);
  Rng rng(5001);
  for (int i = 0; i < 300; ++i) check(random_graph(rng), "random #" + std::to_string(i));
  o.detail << count << " graphs, " << shrunk << " reduced, " << steps << " contractions";
}

void retree(Outcome& o) {
  Rng rng(6001);
  std::size_t cases = 0;
  while (cases < 100) {
    MultiGraph g = random_graph(rng);
    std::vector<std::vector<EdgeId>> splitting;
    for (auto& t : oracle_spanning_trees(g)) {
      if (oracle_tree_xi(g, t) <= 1) splitting.push_back(t);
    }
    if (splitting.empty()) continue;
    std::vector<VertexId> candidates;
    for (VertexId v : g.vertices()) {
      if (degree(g, v) >= 3 && !has_loop_at(g, v) && is_connected(local_subgraph(g, v))) candidates.push_back(v);
    }
    if (candidates.empty()) continue;
    const auto& t = splitting[rng() % splitting.size()];
    VertexId v = candidates[rng() % candidates.size()];
    SpanningTree r = retree_around_vertex(g, SpanningTree{t}, v);
    o.require(is_spanning_tree(g, r), "result is a spanning tree");
    for (VertexId n : neighbors(g, v)) {
      EdgeId lowest{UINT32_MAX};
      for (EdgeId e : g.incident(v)) {
        if (g.edge(e).other(v) == n) lowest = std::min(lowest, e);
      }
      o.require(r.contains(lowest), "selected edge to neighbour");
    }
    o.require(oracle_tree_xi(g, r.edges) <= oracle_tree_xi(g, t), "deficiency did not grow");
    ++cases;
  }
  o.detail << cases << " cases";
}

MultiGraph square_of_cycle(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (std::uint32_t i = 0; i < n; ++i) {
    es.emplace_back(i, (i + 1) % n);
    es.emplace_back(i, (i + 2) % n);
  }
  return MultiGraph::build(n, es);
}

MultiGraph fan(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (std::uint32_t i = 1; i <= n; ++i) es.emplace_back(0, i);
  for (std::uint32_t i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  return MultiGraph::build(n + 1, es);
}

MultiGraph bipyramid(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (std::uint32_t i = 0; i < n; ++i) {
    es.emplace_back(i, (i + 1) % n);
    es.emplace_back(i, n);
    es.emplace_back(i, n + 1);
  }
  return MultiGraph::build(n + 2, es);
}

void locally_connected_family(Outcome& o) {
  std::vector<std::pair<std::string, MultiGraph>> graphs;
  for (std::size_t n = 5; n <= 8; ++n) graphs.emplace_back("K" + std::to_string(n), fixtures::complete(n));
  for (std::size_t n = 4; n <= 13; ++n) graphs.emplace_back("W" + std::to_string(n), fixtures::wheel(n));
  for (std::uint32_t n = 4; n <= 9; ++n) graphs.emplace_back("fan" + std::to_string(n), fan(n));
  for (std::uint32_t n = 6; n <= 11; ++n) graphs.emplace_back("C" + std::to_string(n) + "^2", square_of_cycle(n));
  for (std::uint32_t n = 4; n <= 7; ++n) graphs.emplace_back("bipyramid" + std::to_string(n), bipyramid(n));
  Rng rng(7001);
  EnumerationGuard guard{40, false};
  std::size_t type1 = 0, type2 = 0;
  for (const auto& [name, g] : graphs) {
    o.require(is_connected(g) && is_locally_connected(g), name + " locally connected");
    o.require(is_upper_embeddable(g, guard), name + " upper embeddable");
    std::vector<VertexId> big;
    for (VertexId v : g.vertices()) {
      if (degree(g, v) >= 4) big.push_back(v);
    }
    VertexId v = big[rng() % big.size()];
    SplitSpec s = *random_split(rng, g, v, true);
    bool t1 = is_type1_flexible(g, v).flexible;
    bool t2 = degree(g, v) == 4 && is_type2_flexible_split(g, s).flexible;
    o.require(t1 || t2, name + " split is flexible");
    type1 += t1;
    type2 += !t1 && t2;
    o.require(is_upper_embeddable(split_vertex(g, s).graph, guard), name + " split stays upper embeddable");
  }
  o.detail << graphs.size() << " graphs; splits: " << type1 << " type-I, " << type2 << " type-II";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Runs the CLI, capturing stdout and exit status.
std::pair<int, std::string> run(const std::string& args, const fs::path& out) {
  std::string cmd = std::string(UPEMB_CLI) + " " + args + " > " + out.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  return {WEXITSTATUS(status), slurp(out)};
}

std::string directory_digest(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::string all;
  for (const auto& f : files) all += f.filename().string() + "\n" + slurp(f);
  return all;
}

void determinism(Outcome& o) {
  fs::path dir = fs::temp_directory_path() / "upemb_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const char* name : {"fig4_g", "fig5_g1", "fig7_g1", "k4"}) {
    std::ofstream(dir / (std::string(name) + ".mg1")) << emit_mg1_labeled(fixtures::named(name));
  }
  auto f = [&](const char* name) { return (dir / (std::string(name) + ".mg1")).string(); };
  const std::vector<std::string> commands = {
      "info " + f("fig4_g"),
      "--json check " + f("fig5_g1"),
      "check --reduce " + f("fig5_g1"),
      "genus " + f("fig4_g") + " --heuristic --seed 7",
      "genus " + f("k4") + " --exact",
      "reduce " + f("fig5_g1") + " -o " + (dir / "R.mg1").string() + " --trace " + (dir / "R.json").string(),
      "split " + f("fig4_g") + " -v v --side-a b,f -o " + (dir / "S.mg1").string(),
      "contract " + f("fig5_g1") + " -e 26 -o " + (dir / "C.mg1").string(),
      "fixture fig24_gstar --format dot",
  };
  std::size_t runs = 0;
  for (const std::string& cmd : commands) {
    std::string first, second, first_files, second_files;
    for (int rep = 0; rep < 2; ++rep) {
      auto [code, text] = run(cmd, dir / "stdout.txt");
      std::string files;
      for (const char* out : {"R.mg1", "R.json", "S.mg1", "S.mg1.idmap.json", "C.mg1", "C.mg1.idmap.json"}) {
        if (fs::exists(dir / out)) files += slurp(dir / out);
        fs::remove(dir / out);
      }
      (rep == 0 ? first : second) = std::to_string(code) + text;
      (rep == 0 ? first_files : second_files) = files;
      ++runs;
    }
    o.require(first == second && first_files == second_files, cmd);
  }
  std::ofstream(dir / "k5.mg1") << emit_mg1(fixtures::complete(5));
  std::string digests[3];
  int i = 0;
  for (const char* threads : {"1", "4", "4"}) {
    fs::path out = dir / ("family" + std::to_string(i));
    std::string flags = std::string(" --max-vertices 7 --max-graphs 60 --threads ") + threads;
    auto [c1, t1] = run("family --seed-graph " + f("k5") + flags + " --out-dir " + (out / "k5").string(),
                        dir / "stdout.txt");
    auto [c2, t2] = run("family --bouquet 4" + flags + " --out-dir " + (out / "b4").string(), dir / "stdout.txt");
    o.require(c1 == 0 && c2 == 0, "family exit code");
    digests[i++] = t1 + t2 + directory_digest(out / "k5") + directory_digest(out / "b4");
  }
  o.require(digests[0] == digests[1] && digests[1] == digests[2], "family threads 1 vs 4");
  Family a = generate_family(fixtures::complete(5), FamilyOptions{8, 80, true, true, 1, {}, 10});
  Family b = generate_family(fixtures::complete(5), FamilyOptions{8, 80, true, true, 4, {}, 10});
  o.require(family_index_json(a) == family_index_json(b), "library family threads 1 vs 4");
  fs::remove_all(dir);
  o.detail << commands.size() << " commands x2 (" << runs << " runs), family threads 1/4/4 byte-identical ("
           << a.nodes.size() << " members from K5)";
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)(Outcome&)> criteria[] = {
      {"bouquet law", bouquet_law},
      {"figure verdicts", figure_verdicts},
      {"deficiency / splitting-tree consistency", deficiency_consistency},
      {"type-I split preserves upper embeddability", type1_preservation},
      {"type-II split preserves upper embeddability", type2_preservation},
      {"weak-minor monotonicity", monotonicity},
      {"reduction soundness", reduction_soundness},
      {"retree around a vertex", retree},
      {"locally connected graphs and their splits", locally_connected_family},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 1;
  for (auto [name, fn] : criteria) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.str().c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
