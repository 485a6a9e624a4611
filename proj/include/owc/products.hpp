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

#ifndef OWC_PRODUCTS_HPP_
#define OWC_PRODUCTS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "owc/graph.hpp"

namespace owc {

enum class ProductKind { cartesian, strong, lexicographic };

std::string_view product_kind_name(ProductKind kind);
// Accepts "cartesian", "strong", "lexicographic" and "lex".
std::optional<ProductKind> parse_product_kind(std::string_view name);

/**
 * A product graph together with its factors.
 *
 * Product vertex (g, h) has flat index g * right_order + h (row-major).
 * Every construction set and report refers to product vertices through this
 * pairing, so it is fixed.
 */
class ProductGraph {
 public:
  ProductGraph(Graph graph, ProductKind kind, Graph left, Graph right)
      : graph_(std::move(graph)), kind_(kind), left_(std::move(left)), right_(std::move(right)) {}

  const Graph& graph() const noexcept { return graph_; }
  ProductKind kind() const noexcept { return kind_; }
  const Graph& left() const noexcept { return left_; }
  const Graph& right() const noexcept { return right_; }
  std::size_t left_order() const noexcept { return left_.order(); }
  std::size_t right_order() const noexcept { return right_.order(); }

  Vertex pair(Vertex g, Vertex h) const {
    return static_cast<Vertex>(g * right_order() + h);
  }
  std::pair<Vertex, Vertex> unpair(Vertex v) const {
    return {static_cast<Vertex>(v / right_order()), static_cast<Vertex>(v % right_order())};
  }

 private:
  Graph graph_;
  ProductKind kind_;
  Graph left_;
  Graph right_;
};

// Both factors must be connected with at least two vertices (GraphError /
// DisconnectedError otherwise).
ProductGraph cartesian(const Graph& g, const Graph& h);
// Cartesian edges plus (g,h)~(g',h') whenever gg' in E(G) and hh' in E(H).
ProductGraph strong(const Graph& g, const Graph& h);
// (g,h)~(g',h') iff gg' in E(G), or g = g' and hh' in E(H).
ProductGraph lexicographic(const Graph& g, const Graph& h);
ProductGraph make_product(ProductKind kind, const Graph& g, const Graph& h);

// Closed-form |E(G * H)|.
std::size_t expected_edge_count(ProductKind kind, const Graph& g, const Graph& h);

// pi_G(s) and pi_H(s).
VertexSet project_left(const ProductGraph& p, const VertexSet& s);
VertexSet project_right(const ProductGraph& p, const VertexSet& s);

// G^h = V(G) x {h}.
VertexSet layer_left(const ProductGraph& p, Vertex h);
// ^gH = {g} x V(H).
VertexSet layer_right(const ProductGraph& p, Vertex g);

// A x B under the pairing.
VertexSet product_set(const ProductGraph& p, const VertexSet& left, const VertexSet& right);

// "{(0,0),(1,0)}" with pairs in flat-index order.
std::string format_pairs(const ProductGraph& p, const VertexSet& s);

}  // namespace owc

#endif  // OWC_PRODUCTS_HPP_
