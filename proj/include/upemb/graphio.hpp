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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "upemb/multigraph.hpp"

namespace upemb {

/// Syntax or semantic error in graph text; `line()` is 1-based, 0 if unknown.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A graph plus optional human-readable vertex names.
struct LabeledGraph {
  MultiGraph graph;
  std::vector<std::pair<std::string, VertexId>> labels;

  /// Resolves a label, or a decimal vertex id when no label matches.
  /// Throws GraphError if neither resolves to a vertex of the graph.
  [[nodiscard]] VertexId resolve(std::string_view name) const;
  /// Label of `v`, or its decimal id.
  [[nodiscard]] std::string name_of(VertexId v) const;
};

// MG1 text format: one record per LF-terminated line, exactly one of
//   # <free text>
//   v <id>
//   e <id> <u> <w>
// Ids are decimal without sign or leading zeros; fields are separated by a
// single space. A comment of the form "# label <id> <name>" names a vertex.

MultiGraph parse_mg1(std::string_view text);
LabeledGraph parse_mg1_labeled(std::string_view text);

/// Canonical MG1: vertices ascending, then edges ascending by id.
std::string emit_mg1(const MultiGraph& g);
/// Label comments first, then the canonical body.
std::string emit_mg1_labeled(const LabeledGraph& g);

/// {"vertices": [ids], "edges": [{"id", "u", "w"}]}
std::string emit_json(const MultiGraph& g);
MultiGraph parse_json(std::string_view text);

/// Parses MG1 or the JSON mirror, picked by the first non-blank character.
LabeledGraph parse_any(std::string_view text);

/// Undirected DOT, one statement per edge, edge id in the label attribute.
std::string emit_dot(const MultiGraph& g);

namespace fixtures {

/// One vertex with n loops.
MultiGraph bouquet(std::size_t n);
/// Two vertices joined by three parallel edges.
MultiGraph theta();
MultiGraph complete(std::size_t n);
MultiGraph cycle(std::size_t n);
/// Path on n vertices.
MultiGraph path(std::size_t n);
/// Hub 0 joined to every vertex of the rim cycle 1..n.
MultiGraph wheel(std::size_t n);

/// Named corpus: fig1_g, fig2_g1, fig3_g2, fig4_g, fig5_g1, fig6_g2, fig7_g1,
/// fig8_g, fig23_g, fig24_gstar, theta, k4, plus the parameterised forms
/// bouquet<n>, cycle<n>, wheel<n>, k<n> (e.g. "bouquet5", "wheel4").
/// Throws GraphError for an unknown name.
LabeledGraph named(std::string_view name);

/// Names of the fixed figure fixtures, in corpus order.
std::vector<std::string> figure_names();

}  // namespace fixtures

}  // namespace upemb
