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

#include "upemb/isomorphism.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

namespace upemb {

namespace {

using Matrix = std::vector<std::vector<std::uint32_t>>;

Matrix multiplicities(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  Matrix m(n, std::vector<std::uint32_t>(n, 0));
  for (const Edge& e : g.edges()) {
    std::size_t a = g.vertex_index(e.u);
    std::size_t b = g.vertex_index(e.w);
    ++m[a][b];
    if (a != b) ++m[b][a];
  }
  return m;
}

// Replaces colours by the rank of their signature until the number of
// classes stops growing. Signatures start with the old colour, so the
// relative order of existing cells is preserved.
void refine(const Matrix& m, std::vector<std::uint32_t>& colour) {
  const std::size_t n = colour.size();
  using Signature = std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>>;
  std::size_t classes = 0;
  while (true) {
    std::vector<Signature> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      sig[i].first = colour[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (m[i][j] != 0) sig[i].second.emplace_back(colour[j], m[i][j]);
      }
      std::sort(sig[i].second.begin(), sig[i].second.end());
    }
    std::vector<Signature> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
      colour[i] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
    }
    if (sorted.size() == classes) return;
    classes = sorted.size();
  }
}

std::vector<std::uint32_t> encode(const Matrix& m, const std::vector<std::uint32_t>& position) {
  const std::size_t n = m.size();
  std::vector<std::size_t> at(n);
  for (std::size_t i = 0; i < n; ++i) at[position[i]] = i;
  std::vector<std::uint32_t> code{static_cast<std::uint32_t>(n)};
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p; q < n; ++q) code.push_back(m[at[p]][at[q]]);
  }
  return code;
}

void search(const Matrix& m, std::vector<std::uint32_t> colour, std::optional<std::vector<std::uint32_t>>& best) {
  refine(m, colour);
  const std::size_t n = colour.size();
  // First (lowest-colour) non-singleton cell.
  std::vector<std::size_t> count(n, 0);
  for (auto c : colour) ++count[c];
  std::optional<std::uint32_t> target;
  for (std::uint32_t c = 0; c < n; ++c) {
    if (count[c] > 1) {
      target = c;
      break;
    }
  }
  if (!target) {
    auto code = encode(m, colour);
    if (!best || code < *best) best = std::move(code);
    return;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (colour[x] != *target) continue;
    std::vector<std::uint32_t> next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = colour[i] * 2 + (i == x ? 0 : 1);
    search(m, std::move(next), best);
  }
}

}  // namespace

std::vector<std::uint32_t> canonical_code(const MultiGraph& g) {
  Matrix m = multiplicities(g);
  const std::size_t n = m.size();
  if (n == 0) return {0};
  std::vector<std::uint32_t> colour(n, 0);
  std::optional<std::vector<std::uint32_t>> best;
  search(m, std::move(colour), best);
  return *best;
}

std::string canonical_certificate(const MultiGraph& g) {
  std::string out;
  for (auto x : canonical_code(g)) {
    if (!out.empty()) out += '.';
    out += std::to_string(x);
  }
  return out;
}

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace upemb
