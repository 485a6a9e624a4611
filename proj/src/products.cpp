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

#include "owc/products.hpp"

#include <vector>

#include "owc/error.hpp"

namespace owc {
namespace {

void require_nontrivial(const Graph& g, const Graph& h, ProductKind kind) {
  const std::string what = std::string(product_kind_name(kind)) + " product";
  for (const Graph* f : {&g, &h}) {
    if (f->order() < 2) throw GraphError(what + " needs factors with at least two vertices");
    require_connected(*f, what);
  }
}

bool adjacent(ProductKind kind, const Graph& g, const Graph& h, Vertex g1, Vertex h1, Vertex g2,
              Vertex h2) {
  const bool same_g = g1 == g2, same_h = h1 == h2;
  const bool edge_g = g.has_edge(g1, g2), edge_h = h.has_edge(h1, h2);
  switch (kind) {
    case ProductKind::cartesian: return (same_g && edge_h) || (same_h && edge_g);
    case ProductKind::strong:
      return (same_g && edge_h) || (same_h && edge_g) || (edge_g && edge_h);
    case ProductKind::lexicographic: return edge_g || (same_g && edge_h);
  }
  return false;
}

std::string product_name(ProductKind kind, const Graph& g, const Graph& h) {
  const char* op = kind == ProductKind::cartesian ? "[]" : kind == ProductKind::strong ? "[x]" : "o";
  return (g.name().empty() ? "G" : g.name()) + op + (h.name().empty() ? "H" : h.name());
}

}  // namespace

std::string_view product_kind_name(ProductKind kind) {
  switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::strong: return "strong";
    case ProductKind::lexicographic: return "lexicographic";
  }
  return "?";
}

std::optional<ProductKind> parse_product_kind(std::string_view name) {
  if (name == "cartesian") return ProductKind::cartesian;
  if (name == "strong") return ProductKind::strong;
  if (name == "lexicographic" || name == "lex") return ProductKind::lexicographic;
  return std::nullopt;
}

ProductGraph make_product(ProductKind kind, const Graph& g, const Graph& h) {
  require_nontrivial(g, h, kind);
  const std::size_t m = g.order(), n = h.order();
  if (m * n > kMaxOrder) {
    throw GraphError("product order " + std::to_string(m * n) + " exceeds " +
                     std::to_string(kMaxOrder));
  }
  std::vector<Edge> edges;
  for (Vertex a = 0; a < m * n; ++a) {
    for (Vertex b = a + 1; b < m * n; ++b) {
      if (adjacent(kind, g, h, a / n, a % n, b / n, b % n)) {
        edges.emplace_back(a, b);
      }
    }
  }
  return ProductGraph(Graph(m * n, edges, product_name(kind, g, h)), kind, g, h);
}

ProductGraph cartesian(const Graph& g, const Graph& h) {
  return make_product(ProductKind::cartesian, g, h);
}

ProductGraph strong(const Graph& g, const Graph& h) {
  return make_product(ProductKind::strong, g, h);
}

ProductGraph lexicographic(const Graph& g, const Graph& h) {
  return make_product(ProductKind::lexicographic, g, h);
}

std::size_t expected_edge_count(ProductKind kind, const Graph& g, const Graph& h) {
  const std::size_t m = g.order(), n = h.order();
  const std::size_t eg = g.edge_count(), eh = h.edge_count();
  switch (kind) {
    case ProductKind::cartesian: return m * eh + n * eg;
    case ProductKind::strong: return m * eh + n * eg + 2 * eg * eh;
    case ProductKind::lexicographic: return m * eh + n * n * eg;
  }
  return 0;
}

VertexSet project_left(const ProductGraph& p, const VertexSet& s) {
  VertexSet out(p.left_order());
  for (Vertex v : s) out.insert(p.unpair(v).first);
  return out;
}

VertexSet project_right(const ProductGraph& p, const VertexSet& s) {
  VertexSet out(p.right_order());
  for (Vertex v : s) out.insert(p.unpair(v).second);
  return out;
}

VertexSet layer_left(const ProductGraph& p, Vertex h) {
  VertexSet out(p.graph().order());
  for (Vertex g = 0; g < p.left_order(); ++g) out.insert(p.pair(g, h));
  return out;
}

VertexSet layer_right(const ProductGraph& p, Vertex g) {
  VertexSet out(p.graph().order());
  for (Vertex h = 0; h < p.right_order(); ++h) out.insert(p.pair(g, h));
  return out;
}

VertexSet product_set(const ProductGraph& p, const VertexSet& left, const VertexSet& right) {
  VertexSet out(p.graph().order());
  for (Vertex g : left)
    for (Vertex h : right) out.insert(p.pair(g, h));
  return out;
}

std::string format_pairs(const ProductGraph& p, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    const auto [g, h] = p.unpair(v);
    if (!first) out += ',';
    out += "(" + std::to_string(g) + "," + std::to_string(h) + ")";
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace owc
