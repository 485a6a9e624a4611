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

#include "owc/families.hpp"

#include <string>
#include <vector>

#include "owc/error.hpp"

namespace owc {

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::complete_bipartite: return "complete_bipartite";
    case FamilyKind::star: return "star";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (FamilyKind k : {FamilyKind::path, FamilyKind::cycle, FamilyKind::complete,
                       FamilyKind::complete_bipartite, FamilyKind::star}) {
    if (family_name(k) == name) return k;
  }
  return std::nullopt;
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw GraphError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges, "P" + std::to_string(n));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, edges, "C" + std::to_string(n));
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw GraphError("complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges, "K" + std::to_string(n));
}

Graph complete_bipartite_graph(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw GraphError("complete bipartite parts must be nonempty");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = 0; j < n; ++j) edges.emplace_back(i, static_cast<Vertex>(m + j));
  return Graph(m + n, edges, "K" + std::to_string(m) + "," + std::to_string(n));
}

Graph star_graph(std::size_t leaves) {
  if (leaves < 1) throw GraphError("star needs at least 1 leaf");
  Graph g = complete_bipartite_graph(1, leaves);
  return g;
}

Graph family(FamilyKind kind, std::span<const std::size_t> params) {
  const std::size_t want = kind == FamilyKind::complete_bipartite ? 2 : 1;
  if (params.size() != want) {
    throw GraphError(std::string(family_name(kind)) + " takes " + std::to_string(want) +
                     " parameter(s), got " + std::to_string(params.size()));
  }
  switch (kind) {
    case FamilyKind::path: return path_graph(params[0]);
    case FamilyKind::cycle: return cycle_graph(params[0]);
    case FamilyKind::complete: return complete_graph(params[0]);
    case FamilyKind::complete_bipartite: return complete_bipartite_graph(params[0], params[1]);
    case FamilyKind::star: return star_graph(params[0]);
  }
  throw GraphError("unknown family");
}

}  // namespace owc
