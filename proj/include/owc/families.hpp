// Copyright 2026 The owc Authors.
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

#ifndef OWC_FAMILIES_HPP_
#define OWC_FAMILIES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "owc/graph.hpp"

namespace owc {

enum class FamilyKind { path, cycle, complete, complete_bipartite, star };

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);

// Standard labeled graphs, named P<n>, C<n>, K<n>, K<m>,<n> and K1,<k>.
// Invalid sizes throw GraphError.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// Parts are [0, m) and [m, m + n).
Graph complete_bipartite_graph(std::size_t m, std::size_t n);
// Vertex 0 is the center.
Graph star_graph(std::size_t leaves);

// Dispatch on kind; complete_bipartite takes two parameters, the rest one.
Graph family(FamilyKind kind, std::span<const std::size_t> params);

}  // namespace owc

#endif  // OWC_FAMILIES_HPP_
