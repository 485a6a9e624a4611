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

#include "owc/graph.hpp"

#include "owc/error.hpp"

namespace owc {

Graph::Graph(std::size_t order, std::span<const Edge> edges, std::string name)
    : name_(std::move(name)) {
  if (order == 0 || order > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(order) + " outside [1, " +
                     std::to_string(kMaxOrder) + "]");
  }
  adjacency_.assign(order, VertexSet(order));
  for (const auto& [u, v] : edges) {
    const std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u >= order || v >= order) {
      throw GraphError("edge " + pair + " has an endpoint outside [0, " + std::to_string(order) +
                       ")");
    }
    if (u == v) throw GraphError("self-loop " + pair + " in a simple graph");
    if (!adjacency_[u].contains(v)) {
      adjacency_[u].insert(v);
      adjacency_[v].insert(u);
      ++edge_count_;
    }
  }
  closed_ = adjacency_;
  for (Vertex v = 0; v < order; ++v) closed_[v].insert(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (std::size_t v = adjacency_[u].next_from(u + 1); v < order();
         v = adjacency_[u].next_from(v + 1)) {
      out.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return out;
}

Graph graph_from_edge_list(std::size_t order, std::span<const Edge> edges) {
  return Graph(order, edges);
}

std::vector<DistanceMatrix::Distance> induced_distances(const Graph& g, const VertexSet& allowed,
                                                        Vertex source) {
  std::vector<DistanceMatrix::Distance> dist(g.order(), DistanceMatrix::kUnreachable);
  VertexSet visited(g.order());
  VertexSet frontier(g.order());
  visited.insert(source);
  frontier.insert(source);
  dist[source] = 0;
  for (DistanceMatrix::Distance level = 1; !frontier.empty(); ++level) {
    VertexSet next(g.order());
    for (Vertex x : frontier) next |= g.neighbors(x);
    next &= allowed;
    next -= visited;
    for (Vertex y : next) dist[y] = level;
    visited |= next;
    frontier = next;
  }
  return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix d(g.order());
  const VertexSet all = g.vertices();
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto row = induced_distances(g, all, s);
    for (Vertex t = 0; t < g.order(); ++t) d.set(s, t, row[t]);
  }
  return d;
}

bool is_connected(const Graph& g) {
  VertexSet visited(g.order());
  VertexSet frontier(g.order());
  visited.insert(0);
  frontier.insert(0);
  while (!frontier.empty()) {
    VertexSet next(g.order());
    for (Vertex x : frontier) next |= g.neighbors(x);
    next -= visited;
    visited |= next;
    frontier = next;
  }
  return visited.count() == g.order();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw GraphError("induced subgraph of an empty vertex set");
  std::vector<Vertex> map(g.order(), InducedSubgraph::kNotPresent);
  Vertex next_id = 0;
  for (Vertex v : s) map[v] = next_id++;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (s.contains(u) && s.contains(v)) edges.emplace_back(map[u], map[v]);
  }
  return InducedSubgraph{Graph(next_id, edges), std::move(map)};
}

void require_connected(const Graph& g, const std::string& what) {
  if (!is_connected(g)) {
    throw DisconnectedError(what + " requires a connected graph" +
                            (g.name().empty() ? std::string() : " (got " + g.name() + ")"));
  }
}

}  // namespace owc
