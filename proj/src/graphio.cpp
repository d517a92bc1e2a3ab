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

#include "upemb/graphio.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"

namespace upemb {

namespace {

std::uint32_t parse_id(std::string_view tok, std::size_t line) {
  if (tok.empty()) throw ParseError(line, "missing id");
  if (tok.size() > 1 && tok[0] == '0') throw ParseError(line, "id with leading zero: " + std::string(tok));
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "invalid id: " + std::string(tok));
  }
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = line.find(' ', pos);
    out.push_back(line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

VertexId LabeledGraph::resolve(std::string_view name) const {
  for (const auto& [label, v] : labels) {
    if (label == name) return v;
  }
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), value);
  if (ec == std::errc{} && ptr == name.data() + name.size() && graph.has_vertex(VertexId{value})) {
    return VertexId{value};
  }
  throw GraphError("unknown vertex '" + std::string(name) + "'");
}

std::string LabeledGraph::name_of(VertexId v) const {
  for (const auto& [label, id] : labels) {
    if (id == v) return label;
  }
  return to_string(v);
}

LabeledGraph parse_mg1_labeled(std::string_view text) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::vector<std::pair<std::string, std::uint32_t>> raw_labels;
  std::vector<std::size_t> label_lines;
  std::map<std::uint32_t, std::size_t> seen_vertex, seen_edge;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 1;

    if (line.empty()) throw ParseError(line_no, "empty line");
    if (line.find('\r') != std::string_view::npos || line.find('\t') != std::string_view::npos) {
      throw ParseError(line_no, "only LF line endings and single spaces are accepted");
    }
    if (line[0] == '#') {
      auto f = split_fields(line);
      if (f.size() == 4 && f[0] == "#" && f[1] == "label" && !f[3].empty()) {
        raw_labels.emplace_back(std::string(f[3]), parse_id(f[2], line_no));
        label_lines.push_back(line_no);
      }
      continue;
    }
    auto f = split_fields(line);
    if (f[0] == "v") {
      if (f.size() != 2) throw ParseError(line_no, "expected 'v <id>'");
      std::uint32_t id = parse_id(f[1], line_no);
      if (!seen_vertex.emplace(id, line_no).second) {
        throw ParseError(line_no, "duplicate vertex id " + std::to_string(id));
      }
      vertices.emplace_back(id);
    } else if (f[0] == "e") {
      if (f.size() != 4) throw ParseError(line_no, "expected 'e <id> <u> <w>'");
      std::uint32_t id = parse_id(f[1], line_no);
      if (!seen_edge.emplace(id, line_no).second) {
        throw ParseError(line_no, "duplicate edge id " + std::to_string(id));
      }
      edges.push_back(Edge{EdgeId{id}, VertexId{parse_id(f[2], line_no)}, VertexId{parse_id(f[3], line_no)}});
      edge_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(f[0]) + "'");
    }
  }
  if (vertices.empty()) throw ParseError(line_no, "no vertices declared");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (!seen_vertex.contains(e.u.value) || !seen_vertex.contains(e.w.value)) {
      throw ParseError(edge_lines[i], "edge " + to_string(e.id) + " has a dangling endpoint");
    }
  }
  LabeledGraph out;
  for (std::size_t i = 0; i < raw_labels.size(); ++i) {
    if (!seen_vertex.contains(raw_labels[i].second)) {
      throw ParseError(label_lines[i], "label for undeclared vertex");
    }
    out.labels.emplace_back(raw_labels[i].first, VertexId{raw_labels[i].second});
  }
  out.graph = MultiGraph::from_parts(std::move(vertices), std::move(edges));
  return out;
}

MultiGraph parse_mg1(std::string_view text) { return parse_mg1_labeled(text).graph; }

std::string emit_mg1(const MultiGraph& g) {
  std::string out;
  for (VertexId v : g.vertices()) out += "v " + to_string(v) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + to_string(e.id) + " " + to_string(e.u) + " " + to_string(e.w) + "\n";
  }
  return out;
}

std::string emit_mg1_labeled(const LabeledGraph& g) {
  std::string out;
  for (const auto& [label, v] : g.labels) out += "# label " + to_string(v) + " " + label + "\n";
  return out + emit_mg1(g.graph);
}

std::string emit_json(const MultiGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (VertexId v : g.vertices()) j["vertices"].push_back(v.value);
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    j["edges"].push_back({{"id", e.id.value}, {"u", e.u.value}, {"w", e.w.value}});
  }
  return j.dump() + "\n";
}

MultiGraph parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    std::vector<VertexId> vertices;
    for (const auto& v : j.at("vertices")) vertices.emplace_back(v.get<std::uint32_t>());
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back(Edge{EdgeId{e.at("id").get<std::uint32_t>()}, VertexId{e.at("u").get<std::uint32_t>()},
                           VertexId{e.at("w").get<std::uint32_t>()}});
    }
    if (vertices.empty()) throw ParseError(0, "no vertices declared");
    return MultiGraph::from_parts(std::move(vertices), std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(0, std::string("invalid JSON graph: ") + ex.what());
  }
}

LabeledGraph parse_any(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return LabeledGraph{parse_json(text), {}};
  return parse_mg1_labeled(text);
}

std::string emit_dot(const MultiGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v : g.vertices()) out << "  v" << v.value << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  v" << e.u.value << " -- v" << e.w.value << " [label=\"e" << e.id.value << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace upemb
