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

#ifndef OWC_DOMINATION_HPP_
#define OWC_DOMINATION_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "owc/convexity.hpp"
#include "owc/graph.hpp"

namespace owc {

inline constexpr std::size_t kDefaultOrderCap = 24;

struct SearchOptions {
  // Exact solvers refuse graphs above this order.
  std::size_t order_cap = kDefaultOrderCap;
  // Threads per search level; 1 runs inline.
  unsigned workers = 1;
};

// Outcome of an exact minimum-cardinality search. The witness is the
// passing set whose sorted member list is lexicographically smallest, so it
// does not depend on the worker count.
struct OwcResult {
  std::size_t value = 0;
  VertexSet witness;
  std::uint64_t examined = 0;
  std::chrono::nanoseconds elapsed{0};
};

bool is_dominating(const Graph& g, const VertexSet& d);

// Dominating, and V(G) \ d is weakly convex. d = V(G) qualifies.
bool is_owc_dominating(const Graph& g, const DistanceMatrix& distances, const VertexSet& d);
bool is_owc_dominating(const Graph& g, const VertexSet& d);

// Dominating, and V(G) \ d is convex.
bool is_outer_convex_dominating(const IntervalCache& cache, const VertexSet& d);
bool is_outer_convex_dominating(const Graph& g, const VertexSet& d);

// Exact gamma(G). Rejects disconnected graphs and orders above the cap.
OwcResult domination_number(const Graph& g, const SearchOptions& options = {});

// Exact outer-weakly convex domination number: k-subsets for k = 1, 2, ...
// until a level contains a passing set.
OwcResult owc_domination_number(const Graph& g, const SearchOptions& options = {});

// All minimum outer-weakly convex dominating sets in lexicographic order.
std::vector<VertexSet> enumerate_min_owc_sets(const Graph& g, const SearchOptions& options = {});

// Members of s with no neighbor in s.
VertexSet isolated_in_induced(const Graph& g, const VertexSet& s);

// Which family of minimum sets the isolated-vertex minimum ranges over.
enum class ScriptPReading {
  // Minimum outer-weakly convex dominating sets (default).
  weakly_convex,
  // Outer-convex dominating sets whose size equals the outer-weakly convex
  // domination number. May be empty.
  convex,
};

struct ScriptP {
  std::size_t value = 0;
  // First set in lexicographic order attaining the minimum.
  VertexSet realizer;
};

// Minimum number of isolated vertices in the induced subgraph of a minimum
// set; nullopt when the chosen reading ranges over no sets.
std::optional<ScriptP> compute_script_p(const Graph& g, ScriptPReading reading,
                                        const SearchOptions& options = {});
std::size_t script_p(const Graph& g, const SearchOptions& options = {});

}  // namespace owc

#endif  // OWC_DOMINATION_HPP_
