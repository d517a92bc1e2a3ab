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

// Command-line front end: upemb <command> [options]. See README.md.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "upemb/genus.hpp"
#include "upemb/graphio.hpp"
#include "upemb/reduce.hpp"
#include "upemb/transforms.hpp"

namespace {

using namespace upemb;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct GuardFlags {
  bool force = false;
  std::size_t max_edges = 30;

  [[nodiscard]] EnumerationGuard guard() const { return EnumerationGuard{max_edges, false}; }
};

void add_guard_flags(CLI::App* cmd, GuardFlags& flags) {
  auto* force = cmd->add_flag("--force", flags.force, "Allow raising the enumeration guard");
  cmd->add_option("--max-edges", flags.max_edges, "Enumeration guard in edges (needs --force)")->needs(force);
}

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

LabeledGraph load(const std::string& path) { return parse_any(read_file(path)); }

std::string id_map_json(const std::vector<std::pair<EdgeId, EdgeId>>& map) {
  json j = json::array();
  for (auto [from, to] : map) j.push_back({from.value, to.value});
  return j.dump() + "\n";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// Each command returns its exit code and prints either key=value lines or,
// with --json, a single JSON object.
struct Context {
  bool json_mode = false;
  std::string invocation;

  void emit(const std::string& line, json object) const {
    if (json_mode) {
      object["invocation"] = invocation;
      std::cout << object.dump() << "\n";
    } else {
      std::cout << line << "\n";
    }
  }
};

int cmd_info(const Context& ctx, const std::string& file) {
  const MultiGraph g = load(file).graph;
  const bool connected = is_connected(g);
  std::string beta = connected ? std::to_string(betti(g)) : "n/a";
  std::ostringstream line;
  line << "V=" << g.vertex_count() << " E=" << g.edge_count() << " beta=" << beta << " min_degree=" << min_degree(g)
       << " max_degree=" << max_degree(g) << " connected=" << bool_str(connected)
       << " locally_connected=" << bool_str(is_locally_connected(g));
  json j{{"V", g.vertex_count()},
         {"E", g.edge_count()},
         {"min_degree", min_degree(g)},
         {"max_degree", max_degree(g)},
         {"connected", connected},
         {"locally_connected", is_locally_connected(g)}};
  j["beta"] = connected ? json(betti(g)) : json(nullptr);
  ctx.emit(line.str(), std::move(j));
  return kExitOk;
}

struct CheckFlags {
  bool reduce = false;
  bool quiet = false;
  std::string witness;
  GuardFlags guard;
};

int cmd_check(const Context& ctx, const std::string& file, const CheckFlags& flags) {
  const MultiGraph g = load(file).graph;
  bool verdict = false;
  std::ostringstream line;
  json j;
  std::optional<SpanningTree> witness;
  const MultiGraph* witness_graph = &g;
  std::optional<ReducedCheck> reduced;
  if (flags.reduce) {
    reduced = check_reduced(g, flags.guard.guard());
    verdict = reduced->report.upper_embeddable;
    witness = reduced->report.witness;
    witness_graph = &reduced->reduction.graph;
    line << (verdict ? "upper-embeddable" : "not-upper-embeddable") << " beta=" << reduced->report.betti
         << " xi_reduced=" << reduced->report.xi << " order=" << reduced->original_order << "->"
         << reduced->reduced_order << " steps=" << reduced->reduction.trace.steps.size();
    if (reduced->tree_count_ratio) line << " tree_ratio=" << *reduced->tree_count_ratio;
    j = {{"upper_embeddable", verdict},
         {"beta", reduced->report.betti},
         {"xi_reduced", reduced->report.xi},
         {"original_order", reduced->original_order},
         {"reduced_order", reduced->reduced_order},
         {"steps", reduced->reduction.trace.steps.size()}};
  } else {
    GenusReport report = max_genus(g, GenusOptions{GenusMode::kExact, flags.guard.guard(), 0, 0});
    verdict = report.upper_embeddable;
    witness = report.witness;
    line << (verdict ? "upper-embeddable" : "not-upper-embeddable") << " xi=" << report.xi
         << " gamma_max=" << report.max_genus;
    j = {{"upper_embeddable", verdict},
         {"beta", report.betti},
         {"xi", report.xi},
         {"gamma_max", report.max_genus}};
  }
  if (!flags.witness.empty()) {
    if (!witness) throw Error("no splitting tree exists; nothing written to " + flags.witness);
    write_file(flags.witness, emit_witness(*witness_graph, *witness));
  }
  if (!flags.quiet) ctx.emit(line.str(), std::move(j));
  return verdict ? kExitOk : kExitNo;
}

struct GenusFlags {
  bool exact = false;
  bool heuristic = false;
  std::uint64_t seed = 0;
  std::size_t effort = 1000;
  GuardFlags guard;
};

int cmd_genus(const Context& ctx, const std::string& file, const GenusFlags& flags) {
  const MultiGraph g = load(file).graph;
  GenusOptions options{flags.heuristic ? GenusMode::kHeuristic : GenusMode::kExact, flags.guard.guard(),
                       flags.effort, flags.seed};
  GenusReport report = max_genus(g, options);
  std::ostringstream line;
  line << "beta=" << report.betti << " xi=" << report.xi << " gamma_max=" << report.max_genus;
  if (report.mode == GenusMode::kHeuristic) line << " mode=heuristic upper-bound-on-xi";
  json j{{"beta", report.betti},
         {"xi", report.xi},
         {"gamma_max", report.max_genus},
         {"mode", report.mode == GenusMode::kExact ? "exact" : "heuristic"}};
  ctx.emit(line.str(), std::move(j));
  return kExitOk;
}

struct ReduceFlags {
  std::string out;
  std::string trace;
  bool explore = false;
};

int cmd_reduce(const Context& ctx, const std::string& file, const ReduceFlags& flags) {
  const MultiGraph g = load(file).graph;
  Reduction r = flexible_weak_minor(g);
  write_file(flags.out, emit_mg1(r.graph));
  if (!flags.trace.empty()) write_file(flags.trace, trace_to_json(r.trace));
  std::ostringstream line;
  line << "order=" << r.trace.initial_order << "->" << r.trace.final_order << " steps=" << r.trace.steps.size();
  json j{{"initial_order", r.trace.initial_order}, {"final_order", r.trace.final_order}, {"steps", r.trace.steps.size()}};
  if (flags.explore) {
    OrderExploration ex = explore_reduction_orders(g);
    std::vector<std::size_t> orders;
    for (const auto& [cert, order] : ex.irreducible) orders.push_back(order);
    std::sort(orders.begin(), orders.end());
    line << " irreducible_graphs=" << ex.irreducible.size() << " irreducible_orders=";
    for (std::size_t i = 0; i < orders.size(); ++i) line << (i ? "," : "") << orders[i];
    j["irreducible_graphs"] = ex.irreducible.size();
    j["irreducible_orders"] = orders;
  }
  if (flags.out != "-") ctx.emit(line.str(), std::move(j));
  return kExitOk;
}

struct SplitFlags {
  std::string vertex;
  std::string side_a;
  std::string spec_file;
  std::string out;
  std::string id_map;
  bool allow_loop_ends = false;
  bool min_degree3 = false;
};

int cmd_split(const Context& ctx, const std::string& file, const SplitFlags& flags) {
  const LabeledGraph lg = load(file);
  SplitSpec spec;
  if (!flags.spec_file.empty()) {
    spec = split_spec_from_json(read_file(flags.spec_file));
  } else {
    if (flags.vertex.empty()) throw Error("split needs -v or --spec");
    VertexId v = lg.resolve(flags.vertex);
    std::vector<VertexId> side;
    for (const auto& name : split_list(flags.side_a)) side.push_back(lg.resolve(name));
    spec = split_spec_by_neighbors(lg.graph, v, side);
  }
  SplitOptions options{flags.allow_loop_ends, flags.min_degree3};
  SplitResult r = split_vertex(lg.graph, spec, options);
  FlexibilityVerdict verdict = degree(lg.graph, spec.vertex) == 4 ? is_type2_flexible_split(lg.graph, spec, options)
                                                                  : FlexibilityVerdict{};
  FlexibilityVerdict type1 = is_type1_flexible(lg.graph, spec.vertex);
  if (type1.flexible) verdict = type1;
  write_file(flags.out, emit_mg1(r.graph));
  write_file(flags.id_map.empty() ? flags.out + ".idmap.json" : flags.id_map, id_map_json(r.id_map));
  std::ostringstream line;
  line << "split vertex=" << spec.vertex.value << " v_prime=" << r.v_prime.value
       << " v_double_prime=" << r.v_double_prime.value << " splitting_edge=" << r.splitting_edge.value
       << " flexible=" << bool_str(verdict.flexible) << " rule=" << to_string(verdict.rule);
  ctx.emit(line.str(), json{{"vertex", spec.vertex.value},
                            {"v_prime", r.v_prime.value},
                            {"v_double_prime", r.v_double_prime.value},
                            {"splitting_edge", r.splitting_edge.value},
                            {"flexible", verdict.flexible},
                            {"rule", std::string(to_string(verdict.rule))},
                            {"finding", verdict.finding}});
  return kExitOk;
}

struct ContractFlags {
  std::uint32_t edge = 0;
  std::string out;
  std::string id_map;
};

int cmd_contract(const Context& ctx, const std::string& file, const ContractFlags& flags) {
  const MultiGraph g = load(file).graph;
  const EdgeId e{flags.edge};
  FlexibilityVerdict verdict = is_flexible_edge(g, e);
  ContractResult r = contract_edge(g, e);
  write_file(flags.out, emit_mg1(r.graph));
  write_file(flags.id_map.empty() ? flags.out + ".idmap.json" : flags.id_map, id_map_json(r.id_map));
  std::ostringstream line;
  line << "contract edge=" << e.value << " merged=" << r.merged.value << " removed=" << r.removed.value
       << " flexible=" << bool_str(verdict.flexible) << " rule=" << to_string(verdict.rule);
  ctx.emit(line.str(), json{{"edge", e.value},
                            {"merged", r.merged.value},
                            {"removed", r.removed.value},
                            {"flexible", verdict.flexible},
                            {"rule", std::string(to_string(verdict.rule))},
                            {"finding", verdict.finding}});
  return kExitOk;
}

struct FamilyFlags {
  std::string seed_graph;
  std::size_t bouquet = 0;
  std::string out_dir;
  bool no_type1 = false;
  bool no_type2 = false;
  FamilyOptions options;
  GuardFlags guard;
};

int cmd_family(const Context& ctx, FamilyFlags flags) {
  MultiGraph seed = flags.seed_graph.empty() ? fixtures::bouquet(flags.bouquet) : load(flags.seed_graph).graph;
  flags.options.type1 = !flags.no_type1;
  flags.options.type2 = !flags.no_type2;
  flags.options.guard = flags.guard.guard();
  Family f = generate_family(seed, flags.options);
  if (!flags.out_dir.empty()) write_family_directory(f, flags.out_dir);
  std::map<std::size_t, std::size_t> per_depth;
  for (const auto& n : f.nodes) ++per_depth[n.depth];
  std::ostringstream line;
  line << "members=" << f.nodes.size() << " rejected=" << f.rejected
       << " budget_exhausted=" << bool_str(f.budget_exhausted);
  json depths = json::object();
  for (auto [d, c] : per_depth) {
    line << "\ndepth=" << d << " count=" << c;
    depths[std::to_string(d)] = c;
  }
  ctx.emit(line.str(), json{{"members", f.nodes.size()},
                            {"rejected", f.rejected},
                            {"budget_exhausted", f.budget_exhausted},
                            {"per_depth", depths}});
  return kExitOk;
}

int cmd_verify_trace(const Context& ctx, const std::string& file, const std::string& trace_file,
                     const std::string& final_file) {
  const MultiGraph g = load(file).graph;
  ReductionTrace t = trace_from_json(read_file(trace_file));
  std::optional<MultiGraph> final_graph;
  if (!final_file.empty()) final_graph = load(final_file).graph;
  TraceCheck check = verify_trace(g, t, final_graph ? &*final_graph : nullptr);
  ctx.emit(check.ok ? "trace-ok" : "trace-invalid " + check.reason,
           json{{"ok", check.ok}, {"reason", check.reason}});
  return check.ok ? kExitOk : kExitNo;
}

int cmd_fixture(const std::string& name, const std::string& format, bool no_labels) {
  LabeledGraph g = fixtures::named(name);
  if (format == "json") {
    std::cout << emit_json(g.graph);
  } else if (format == "dot") {
    std::cout << emit_dot(g.graph);
  } else {
    std::cout << (no_labels ? emit_mg1(g.graph) : emit_mg1_labeled(g));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum genus, upper embeddability, vertex splitting and flexible-weak-minor reduction"};
  app.require_subcommand(1);
  Context ctx;
  for (int i = 0; i < argc; ++i) ctx.invocation += (i ? " " : "") + std::string(i ? argv[i] : "upemb");
  app.add_flag("--json", ctx.json_mode, "Emit one JSON object per invocation");

  std::string file;
  auto* info = app.add_subcommand("info", "Print order, size, Betti number and degree summary");
  info->add_option("file", file, "MG1 or JSON graph ('-' for stdin)")->required();

  CheckFlags check_flags;
  auto* check = app.add_subcommand("check", "Decide upper embeddability (exit 0 yes, 1 no, 2 error)");
  check->add_option("file", file)->required();
  check->add_flag("--reduce", check_flags.reduce, "Reduce to the flexible-weak-minor first");
  check->add_flag("--quiet", check_flags.quiet, "No output; verdict in the exit code");
  check->add_option("--witness", check_flags.witness, "Write the splitting tree here");
  add_guard_flags(check, check_flags.guard);

  GenusFlags genus_flags;
  auto* genus = app.add_subcommand("genus", "Report beta, xi and the maximum genus");
  genus->add_option("file", file)->required();
  auto* exact = genus->add_flag("--exact", genus_flags.exact, "Exhaustive spanning-tree enumeration (default)");
  genus->add_flag("--heuristic", genus_flags.heuristic, "Seeded local search; xi is an upper bound")->excludes(exact);
  genus->add_option("--seed", genus_flags.seed, "Random seed for --heuristic");
  genus->add_option("--effort", genus_flags.effort, "Local-search iterations for --heuristic");
  add_guard_flags(genus, genus_flags.guard);

  ReduceFlags reduce_flags;
  auto* reduce = app.add_subcommand("reduce", "Contract flexible edges until none remain");
  reduce->add_option("file", file)->required();
  reduce->add_option("-o,--out", reduce_flags.out, "Reduced graph (MG1)")->required();
  reduce->add_option("--trace", reduce_flags.trace, "Trace JSON");
  reduce->add_flag("--explore-orders", reduce_flags.explore, "Enumerate every contraction order (small graphs)");

  SplitFlags split_flags;
  auto* split = app.add_subcommand("split", "Split one vertex");
  split->add_option("file", file)->required();
  split->add_option("-v,--vertex", split_flags.vertex, "Vertex label or id");
  split->add_option("--side-a", split_flags.side_a, "Comma-separated neighbours whose edges go to v'");
  split->add_option("--spec", split_flags.spec_file, "SplitSpec JSON file (edge-end form)");
  split->add_option("-o,--out", split_flags.out)->required();
  split->add_option("--id-map", split_flags.id_map, "Edge id map JSON (default: OUT.idmap.json)");
  split->add_flag("--allow-loop-ends", split_flags.allow_loop_ends);
  split->add_flag("--min-degree3", split_flags.min_degree3, "Require two ends on each side");

  ContractFlags contract_flags;
  auto* contract = app.add_subcommand("contract", "Contract one non-loop edge");
  contract->add_option("file", file)->required();
  contract->add_option("-e,--edge", contract_flags.edge)->required();
  contract->add_option("-o,--out", contract_flags.out)->required();
  contract->add_option("--id-map", contract_flags.id_map, "Edge id map JSON (default: OUT.idmap.json)");

  FamilyFlags family_flags;
  auto* family = app.add_subcommand("family", "Grow a family of upper embeddable graphs by flexible splits");
  auto* seed_graph = family->add_option("--seed-graph", family_flags.seed_graph, "Seed graph file");
  family->add_option("--bouquet", family_flags.bouquet, "Seed with the bouquet of n loops")->excludes(seed_graph);
  family->add_option("--max-vertices", family_flags.options.max_vertices)->required();
  family->add_option("--max-graphs", family_flags.options.max_graphs)->required();
  family->add_option("--out-dir", family_flags.out_dir, "Write members and index.json here");
  family->add_option("--threads", family_flags.options.threads, "Frontier expansion workers");
  family->add_flag("--no-type1", family_flags.no_type1);
  family->add_flag("--no-type2", family_flags.no_type2);
  add_guard_flags(family, family_flags.guard);

  std::string trace_file, final_file;
  auto* verify = app.add_subcommand("verify-trace", "Replay and re-certify a reduction trace");
  verify->add_option("file", file)->required();
  verify->add_option("trace", trace_file)->required();
  verify->add_option("--final", final_file, "Expected reduced graph");

  std::string fixture_name, format = "mg1";
  bool no_labels = false;
  auto* fixture = app.add_subcommand("fixture", "Print a built-in graph");
  fixture->add_option("name", fixture_name, "fig4_g, bouquet5, wheel4, k5, ...")->required();
  fixture->add_option("--format", format)->check(CLI::IsMember({"mg1", "json", "dot"}));
  fixture->add_flag("--no-labels", no_labels, "Canonical MG1 without label comments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*info) return cmd_info(ctx, file);
    if (*check) return cmd_check(ctx, file, check_flags);
    if (*genus) return cmd_genus(ctx, file, genus_flags);
    if (*reduce) return cmd_reduce(ctx, file, reduce_flags);
    if (*split) return cmd_split(ctx, file, split_flags);
    if (*contract) return cmd_contract(ctx, file, contract_flags);
    if (*family) {
      if (family_flags.seed_graph.empty() && family_flags.bouquet == 0) throw Error("family needs --seed-graph or --bouquet");
      return cmd_family(ctx, family_flags);
    }
    if (*verify) return cmd_verify_trace(ctx, file, trace_file, final_file);
    if (*fixture) return cmd_fixture(fixture_name, format, no_labels);
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "; use --reduce or --heuristic, or --force --max-edges N\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
