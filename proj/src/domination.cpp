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

#include "owc/domination.hpp"

#include <string>

#include "owc/error.hpp"
#include "owc/subset_search.hpp"

namespace owc {
namespace {

using Clock = std::chrono::steady_clock;

void check_searchable(const Graph& g, const SearchOptions& options, const char* what) {
  if (g.order() > options.order_cap) {
    throw CapExceededError(std::string(what) + ": order " + std::to_string(g.order()) +
                           " exceeds the search cap " + std::to_string(options.order_cap) +
                           " (raise it with --cap)");
  }
  require_connected(g, what);
}

// Closed neighborhoods of d cover V(G).
bool covers(const Graph& g, const VertexSet& d) {
  VertexSet reached(g.order());
  for (Vertex v : d) reached |= g.closed_neighbors(v);
  return reached.count() == g.order();
}

// Smallest level with a passing set; the full vertex set always passes for
// the predicates used here, so the loop terminates.
template <class Pred>
OwcResult minimum_search(const Graph& g, const SearchOptions& options, const Pred& pred) {
  const auto start = Clock::now();
  OwcResult result;
  for (std::size_t k = 1; k <= g.order(); ++k) {
    auto hit = find_lex_min_subset(g.order(), k, options.workers, pred, result.examined);
    if (hit) {
      result.value = k;
      result.witness = *hit;
      break;
    }
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return result;
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& d) { return covers(g, d); }

bool is_owc_dominating(const Graph& g, const DistanceMatrix& distances, const VertexSet& d) {
  return covers(g, d) && is_weakly_convex(g, distances, d.complement());
}

bool is_owc_dominating(const Graph& g, const VertexSet& d) {
  return is_owc_dominating(g, distance_matrix(g), d);
}

bool is_outer_convex_dominating(const IntervalCache& cache, const VertexSet& d) {
  return covers(cache.graph(), d) && is_convex(cache, d.complement());
}

bool is_outer_convex_dominating(const Graph& g, const VertexSet& d) {
  return is_outer_convex_dominating(IntervalCache(g), d);
}

OwcResult domination_number(const Graph& g, const SearchOptions& options) {
  check_searchable(g, options, "domination number");
  return minimum_search(g, options, [&g](const VertexSet& s) { return covers(g, s); });
}

OwcResult owc_domination_number(const Graph& g, const SearchOptions& options) {
  check_searchable(g, options, "outer-weakly convex domination number");
  const DistanceMatrix distances = distance_matrix(g);
  return minimum_search(g, options,
                        [&](const VertexSet& s) { return is_owc_dominating(g, distances, s); });
}

std::vector<VertexSet> enumerate_min_owc_sets(const Graph& g, const SearchOptions& options) {
  const OwcResult best = owc_domination_number(g, options);
  const DistanceMatrix distances = distance_matrix(g);
  std::uint64_t examined = 0;
  return collect_subsets(
      g.order(), best.value, options.workers,
      [&](const VertexSet& s) { return is_owc_dominating(g, distances, s); }, examined);
}

VertexSet isolated_in_induced(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  for (Vertex v : s) {
    if (!g.neighbors(v).intersects(s)) out.insert(v);
  }
  return out;
}

std::optional<ScriptP> compute_script_p(const Graph& g, ScriptPReading reading,
                                        const SearchOptions& options) {
  std::vector<VertexSet> candidates;
  if (reading == ScriptPReading::weakly_convex) {
    candidates = enumerate_min_owc_sets(g, options);
  } else {
    const std::size_t size = owc_domination_number(g, options).value;
    const IntervalCache cache(g);
    std::uint64_t examined = 0;
    candidates = collect_subsets(
        g.order(), size, options.workers,
        [&](const VertexSet& s) { return is_outer_convex_dominating(cache, s); }, examined);
  }
  std::optional<ScriptP> best;
  for (const VertexSet& s : candidates) {
    const std::size_t isolated = isolated_in_induced(g, s).count();
    if (!best || isolated < best->value) best = ScriptP{isolated, s};
  }
  return best;
}

std::size_t script_p(const Graph& g, const SearchOptions& options) {
  return compute_script_p(g, ScriptPReading::weakly_convex, options)->value;
}

}  // namespace owc
