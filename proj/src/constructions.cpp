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

#include "owc/constructions.hpp"

#include <random>
#include <string>

#include "owc/error.hpp"

namespace owc {
namespace {

void require_kind(const ProductGraph& p, ProductKind kind, Recipe recipe) {
  if (p.kind() != kind) {
    throw HypothesisError(std::string(recipe_name(recipe)) + " needs a " +
                          std::string(product_kind_name(kind)) + " product");
  }
}

void require_owc(const Graph& factor, const VertexSet& s, Recipe recipe, const char* role) {
  if (s.universe() != factor.order()) {
    throw HypothesisError(std::string(recipe_name(recipe)) + ": " + role +
                          " is not over its factor's vertex set");
  }
  if (!is_owc_dominating(factor, s)) {
    throw HypothesisError(std::string(recipe_name(recipe)) + ": " + role + " " + s.to_string() +
                          " is not outer-weakly convex dominating in " + factor.name());
  }
}

void require_minimum_owc(const Graph& factor, const VertexSet& s, Recipe recipe,
                         const SearchOptions& options) {
  require_owc(factor, s, recipe, "S");
  const std::size_t best = owc_domination_number(factor, options).value;
  if (s.count() != best) {
    throw HypothesisError(std::string(recipe_name(recipe)) + ": |S| = " +
                          std::to_string(s.count()) + " but the minimum is " +
                          std::to_string(best));
  }
}

ConstructionSet cover(const ProductGraph& p, const VertexSet& factor_set, bool right, Recipe recipe) {
  const Graph& factor = right ? p.right() : p.left();
  require_owc(factor, factor_set, recipe, right ? "T" : "S");
  ConstructionSet c{.set = right ? product_set(p, p.left().vertices(), factor_set)
                                 : product_set(p, factor_set, p.right().vertices()),
                    .recipe = recipe,
                    .factor_set = factor_set,
                    .anchors = {},
                    .chosen_neighbors = {},
                    .expected_size = factor_set.count() *
                                     (right ? p.left_order() : p.right_order())};
  return c;
}

VertexSet single(std::size_t universe, Vertex v) {
  VertexSet s(universe);
  s.insert(v);
  return s;
}

}  // namespace

std::string_view recipe_name(Recipe recipe) {
  switch (recipe) {
    case Recipe::cartesian_right_cover: return "cartesian_right_cover";
    case Recipe::cartesian_left_cover: return "cartesian_left_cover";
    case Recipe::strong_right_cover: return "strong_right_cover";
    case Recipe::strong_left_cover: return "strong_left_cover";
    case Recipe::strong_kn_slice: return "strong_kn_slice";
    case Recipe::strong_kmn_pair: return "strong_kmn_pair";
    case Recipe::lexico_anchor: return "lexico_anchor";
  }
  return "?";
}

bool is_complete(const Graph& g) {
  return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g) {
  if (!is_connected(g) || g.order() < 2) return std::nullopt;
  // In a connected complete bipartite graph the far side of vertex 0 is
  // exactly N(0).
  const VertexSet right = g.neighbors(0);
  const VertexSet left = right.complement();
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet& want = left.contains(v) ? right : left;
    if (!(g.neighbors(v) == want)) return std::nullopt;
  }
  return std::make_pair(left.count(), right.count());
}

Vertex choose_vertex(const Graph& h, const ChoicePolicy& policy) {
  if (!policy.seed) return 0;
  std::mt19937_64 rng(*policy.seed);
  return static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, h.order() - 1)(rng));
}

std::pair<Vertex, Vertex> choose_edge(const Graph& h, const ChoicePolicy& policy) {
  const auto edges = h.edges();
  if (edges.empty()) throw HypothesisError("graph " + h.name() + " has no edges");
  if (!policy.seed) return edges.front();
  std::mt19937_64 rng(*policy.seed);
  return edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
}

ConstructionSet cartesian_right_cover(const ProductGraph& p, const VertexSet& t) {
  require_kind(p, ProductKind::cartesian, Recipe::cartesian_right_cover);
  return cover(p, t, true, Recipe::cartesian_right_cover);
}

ConstructionSet cartesian_left_cover(const ProductGraph& p, const VertexSet& s) {
  require_kind(p, ProductKind::cartesian, Recipe::cartesian_left_cover);
  return cover(p, s, false, Recipe::cartesian_left_cover);
}

ConstructionSet strong_right_cover(const ProductGraph& p, const VertexSet& t) {
  require_kind(p, ProductKind::strong, Recipe::strong_right_cover);
  return cover(p, t, true, Recipe::strong_right_cover);
}

ConstructionSet strong_left_cover(const ProductGraph& p, const VertexSet& s) {
  require_kind(p, ProductKind::strong, Recipe::strong_left_cover);
  return cover(p, s, false, Recipe::strong_left_cover);
}

ConstructionSet strong_kn_slice(const ProductGraph& p, const VertexSet& s, Vertex h,
                                const SearchOptions& options) {
  constexpr Recipe recipe = Recipe::strong_kn_slice;
  require_kind(p, ProductKind::strong, recipe);
  if (!is_complete(p.right()) || p.right_order() < 2) {
    throw HypothesisError("strong_kn_slice needs K_n with n >= 2 as the right factor");
  }
  if (h >= p.right_order()) throw HypothesisError("strong_kn_slice: h out of range");
  require_minimum_owc(p.left(), s, recipe, options);
  return ConstructionSet{.set = product_set(p, s, single(p.right_order(), h)),
                         .recipe = recipe,
                         .factor_set = s,
                         .anchors = {h},
                         .chosen_neighbors = {},
                         .expected_size = s.count()};
}

ConstructionSet strong_kmn_pair(const ProductGraph& p, const VertexSet& s_dom, Vertex h,
                                Vertex h_prime, const SearchOptions& options) {
  constexpr Recipe recipe = Recipe::strong_kmn_pair;
  require_kind(p, ProductKind::strong, recipe);
  const auto parts = complete_bipartite_parts(p.right());
  if (!parts || parts->first < 2 || parts->second < 2) {
    throw HypothesisError("strong_kmn_pair needs K_{m,n} with m, n >= 2 as the right factor");
  }
  if (h >= p.right_order() || h_prime >= p.right_order() || !p.right().has_edge(h, h_prime)) {
    throw HypothesisError("strong_kmn_pair: hh' = (" + std::to_string(h) + "," +
                          std::to_string(h_prime) + ") is not an edge of " + p.right().name());
  }
  if (s_dom.universe() != p.left_order() || !is_dominating(p.left(), s_dom)) {
    throw HypothesisError("strong_kmn_pair: S is not a dominating set of " + p.left().name());
  }
  const std::size_t gamma = domination_number(p.left(), options).value;
  if (s_dom.count() != gamma) {
    throw HypothesisError("strong_kmn_pair: |S| = " + std::to_string(s_dom.count()) +
                          " but gamma = " + std::to_string(gamma));
  }
  VertexSet anchors(p.right_order(), {h, h_prime});
  return ConstructionSet{.set = product_set(p, s_dom, anchors),
                         .recipe = recipe,
                         .factor_set = s_dom,
                         .anchors = {h, h_prime},
                         .chosen_neighbors = {},
                         .expected_size = 2 * s_dom.count()};
}

ConstructionSet lexico_anchor(const ProductGraph& p, const VertexSet& s, Vertex h,
                              const ChoicePolicy& policy, const SearchOptions& options) {
  constexpr Recipe recipe = Recipe::lexico_anchor;
  require_kind(p, ProductKind::lexicographic, recipe);
  if (h >= p.right_order()) throw HypothesisError("lexico_anchor: h out of range");
  const Graph& g = p.left();
  require_minimum_owc(g, s, recipe, options);
  const VertexSet isolated = isolated_in_induced(g, s);
  const std::size_t script = script_p(g, options);
  if (isolated.count() != script) {
    throw HypothesisError("lexico_anchor: S has " + std::to_string(isolated.count()) +
                          " isolated vertices but script P = " + std::to_string(script));
  }

  std::mt19937_64 rng(policy.seed.value_or(0));
  VertexSet base = s;
  std::vector<Edge> chosen;
  for (Vertex v : isolated) {
    const auto options_for_v = g.neighbors(v).to_vector();
    // Connected and nontrivial, so every vertex has a neighbor.
    Vertex pick = options_for_v.front();
    if (policy.seed) {
      pick = options_for_v[std::uniform_int_distribution<std::size_t>(0, options_for_v.size() - 1)(rng)];
    }
    chosen.emplace_back(v, pick);
    base.insert(pick);
  }
  return ConstructionSet{.set = product_set(p, base, single(p.right_order(), h)),
                         .recipe = recipe,
                         .factor_set = s,
                         .anchors = {h},
                         .chosen_neighbors = std::move(chosen),
                         .expected_size = s.count() + script};
}

}  // namespace owc
