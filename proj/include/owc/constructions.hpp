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

#ifndef OWC_CONSTRUCTIONS_HPP_
#define OWC_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "owc/domination.hpp"
#include "owc/products.hpp"

namespace owc {

// Candidate sets built from factor-level sets. Each builder checks its own
// hypotheses with the factor predicates and throws HypothesisError when
// they fail; whether the result is actually outer-weakly convex dominating
// in the product is left to the caller to test.

enum class Recipe {
  cartesian_right_cover,  // V(G) x T in G [] H
  cartesian_left_cover,   // S x V(H) in G [] H
  strong_right_cover,     // V(G) x T in G [x] H
  strong_left_cover,      // S x V(H) in G [x] H
  strong_kn_slice,        // S x {h} in G [x] K_n
  strong_kmn_pair,        // S x {h, h'} in G [x] K_{m,n}
  lexico_anchor,          // (S u {v_i'}) x {h} in G o H
};

std::string_view recipe_name(Recipe recipe);

struct ConstructionSet {
  VertexSet set;
  Recipe recipe;
  // S or T, over the factor it came from.
  VertexSet factor_set;
  // h, h' where the recipe uses them.
  std::vector<Vertex> anchors;
  // (v_i, v_i') for lexico_anchor.
  std::vector<Edge> chosen_neighbors;
  // Size promised by the recipe's closed form. lexico_anchor may come out
  // smaller when two isolated vertices share a chosen neighbor.
  std::size_t expected_size = 0;
};

// Choice points the proofs leave open (h, the edge hh', each v_i') default
// to the smallest index; a seed picks them pseudo-randomly instead.
struct ChoicePolicy {
  std::optional<std::uint64_t> seed;
};

ConstructionSet cartesian_right_cover(const ProductGraph& p, const VertexSet& t);
ConstructionSet cartesian_left_cover(const ProductGraph& p, const VertexSet& s);
ConstructionSet strong_right_cover(const ProductGraph& p, const VertexSet& t);
ConstructionSet strong_left_cover(const ProductGraph& p, const VertexSet& s);

// s must be a minimum outer-weakly convex dominating set of G and the
// right factor a complete graph on n >= 2 vertices.
ConstructionSet strong_kn_slice(const ProductGraph& p, const VertexSet& s, Vertex h,
                                const SearchOptions& options = {});

// s_dom must be a minimum dominating set of G, the right factor a complete
// bipartite graph with both parts of size >= 2, and hh' one of its edges.
ConstructionSet strong_kmn_pair(const ProductGraph& p, const VertexSet& s_dom, Vertex h,
                                Vertex h_prime, const SearchOptions& options = {});

// s must be a minimum outer-weakly convex dominating set of G whose number
// of isolated vertices equals the weakly convex reading of script P.
ConstructionSet lexico_anchor(const ProductGraph& p, const VertexSet& s, Vertex h,
                              const ChoicePolicy& policy = {}, const SearchOptions& options = {});

// Returns (h, h') for strong_kmn_pair: the first edge at vertex 0 by
// default, or a seeded random edge.
std::pair<Vertex, Vertex> choose_edge(const Graph& h, const ChoicePolicy& policy);
// Vertex 0 by default, or a seeded random vertex.
Vertex choose_vertex(const Graph& h, const ChoicePolicy& policy);

// Sizes of the two parts if g is complete bipartite (connected, with the
// bipartition found by 2-coloring from vertex 0), else nullopt.
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g);
bool is_complete(const Graph& g);

}  // namespace owc

#endif  // OWC_CONSTRUCTIONS_HPP_
