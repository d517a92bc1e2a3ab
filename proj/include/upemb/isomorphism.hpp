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

#include <cstdint>
#include <string>
#include <vector>

#include "upemb/multigraph.hpp"

namespace upemb {

/// Isomorphism-invariant encoding of a multigraph: the vertex count followed
/// by the upper triangle (diagonal = loop counts) of the edge-multiplicity
/// matrix under the lexicographically least labelling reachable by colour
/// refinement and individualisation. Exponential on highly symmetric graphs;
/// intended for small orders.
std::vector<std::uint32_t> canonical_code(const MultiGraph& g);

/// Printable form of canonical_code.
std::string canonical_certificate(const MultiGraph& g);

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b);

}  // namespace upemb
