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

#ifndef OWC_CONVEXITY_HPP_
#define OWC_CONVEXITY_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "owc/graph.hpp"

namespace owc {

/**
 * Geodesic interval oracle for one graph.
 *
 * Owns the graph's distance matrix and memoizes I[u,v], the set of vertices
 * lying on some u-v geodesic. The memo is keyed by unordered pair, so it
 * never holds more than n^2 entries, and is guarded by a mutex: concurrent
 * callers may duplicate work but always observe correct results.
 *
 * The graph must outlive the cache.
 */
class IntervalCache {
 public:
  explicit IntervalCache(const Graph& g);
  IntervalCache(const Graph& g, DistanceMatrix distances);

  const Graph& graph() const noexcept { return *graph_; }
  const DistanceMatrix& distances() const noexcept { return distances_; }

  // Throws DisconnectedError when u and v are in different components.
  VertexSet interval(Vertex u, Vertex v) const;

 private:
  struct Memo {
    std::mutex mutex;
    std::unordered_map<std::uint64_t, VertexSet> entries;
  };

  const Graph* graph_;
  DistanceMatrix distances_;
  std::unique_ptr<Memo> memo_;
};

// {w : d(u,w) + d(w,v) = d(u,v)}.
VertexSet interval(const IntervalCache& cache, Vertex u, Vertex v);

// Union of I[x,y] over x, y in d. Throws DisconnectedError on an
// unreachable pair.
VertexSet interval_closure(const IntervalCache& cache, const VertexSet& d);

// I[d] == d. Pairs in different components contribute no geodesic.
bool is_convex(const IntervalCache& cache, const VertexSet& d);

// Every pair of members is joined by a geodesic of the whole graph lying
// inside d. Checked as: for each member u, breadth-first distances inside
// the induced subgraph on d match the global distances layer by layer.
// Empty sets and singletons are weakly convex; a pair split by the induced
// subgraph is not.
bool is_weakly_convex(const Graph& g, const DistanceMatrix& distances, const VertexSet& d);
bool is_weakly_convex(const IntervalCache& cache, const VertexSet& d);

// Reference implementation of the same predicate by explicit enumeration of
// every u-v geodesic (a walk of the interval DAG). Exponential; intended for
// orders up to about 12.
bool is_weakly_convex_oracle(const IntervalCache& cache, const VertexSet& d);

}  // namespace owc

#endif  // OWC_CONVEXITY_HPP_
