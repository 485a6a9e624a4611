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

#ifndef OWC_GRAPH_HPP_
#define OWC_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "owc/vertex_set.hpp"

namespace owc {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on the dense vertex ids 0..order-1.
 *
 * Each vertex stores its open and closed neighborhoods as VertexSets so
 * that domination and breadth-first sweeps are bit-parallel. Instances are
 * immutable once built and may be shared across threads.
 */
class Graph {
 public:
  // Duplicate edges collapse; self-loops and out-of-range ids throw
  // GraphError. Order must be in [1, kMaxOrder].
  Graph(std::size_t order, std::span<const Edge> edges, std::string name = {});

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  const VertexSet& closed_neighbors(Vertex v) const { return closed_[v]; }
  bool has_edge(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }
  VertexSet vertices() const { return VertexSet::full(order()); }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Adjacency equality; names are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<VertexSet> closed_;
  std::size_t edge_count_ = 0;
  std::string name_;
};

Graph graph_from_edge_list(std::size_t order, std::span<const Edge> edges);

// All-pairs hop distances.
class DistanceMatrix {
 public:
  using Distance = std::uint32_t;
  static constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

  explicit DistanceMatrix(std::size_t order)
      : order_(order), entries_(order * order, kUnreachable) {}

  std::size_t order() const noexcept { return order_; }
  Distance at(Vertex u, Vertex v) const { return entries_[u * order_ + v]; }
  void set(Vertex u, Vertex v, Distance d) { entries_[u * order_ + v] = d; }
  bool reachable(Vertex u, Vertex v) const { return at(u, v) != kUnreachable; }

 private:
  std::size_t order_;
  std::vector<Distance> entries_;
};

// One breadth-first sweep per source over the bit-parallel adjacency.
DistanceMatrix distance_matrix(const Graph& g);

// Distances from `source` inside the subgraph induced by `allowed`
// (`source` must be a member). Non-members and unreached members are
// kUnreachable.
std::vector<DistanceMatrix::Distance> induced_distances(const Graph& g, const VertexSet& allowed,
                                                        Vertex source);

bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // old id -> new id, or kNotPresent for vertices outside the set.
  std::vector<Vertex> index_map;

  static constexpr Vertex kNotPresent = std::numeric_limits<Vertex>::max();
};

// Order-preserving relabeling of the subgraph induced by `s`; throws
// GraphError when `s` is empty.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Throws DisconnectedError naming `what` if `g` is not connected.
void require_connected(const Graph& g, const std::string& what);

}  // namespace owc

#endif  // OWC_GRAPH_HPP_
