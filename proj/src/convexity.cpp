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

#include "owc/convexity.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "owc/error.hpp"

namespace owc {

IntervalCache::IntervalCache(const Graph& g) : IntervalCache(g, distance_matrix(g)) {}

IntervalCache::IntervalCache(const Graph& g, DistanceMatrix distances)
    : graph_(&g), distances_(std::move(distances)), memo_(std::make_unique<Memo>()) {}

VertexSet IntervalCache::interval(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const std::uint64_t key = (std::uint64_t{u} << 32) | v;
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->entries.find(key); it != memo_->entries.end()) return it->second;
  }
  const auto duv = distances_.at(u, v);
  if (duv == DistanceMatrix::kUnreachable) {
    throw DisconnectedError("no geodesic between " + std::to_string(u) + " and " +
                            std::to_string(v));
  }
  VertexSet out(graph_->order());
  for (Vertex w = 0; w < graph_->order(); ++w) {
    const auto a = distances_.at(u, w);
    const auto b = distances_.at(w, v);
    if (a != DistanceMatrix::kUnreachable && b != DistanceMatrix::kUnreachable && a + b == duv) {
      out.insert(w);
    }
  }
  std::lock_guard lock(memo_->mutex);
  memo_->entries.emplace(key, out);
  return out;
}

VertexSet interval(const IntervalCache& cache, Vertex u, Vertex v) {
  return cache.interval(u, v);
}

VertexSet interval_closure(const IntervalCache& cache, const VertexSet& d) {
  VertexSet out = d;
  for (Vertex x : d) {
    for (std::size_t y = d.next_from(x + 1); y < d.universe(); y = d.next_from(y + 1)) {
      out |= cache.interval(x, static_cast<Vertex>(y));
    }
  }
  return out;
}

bool is_convex(const IntervalCache& cache, const VertexSet& d) {
  for (Vertex x : d) {
    for (std::size_t y = d.next_from(x + 1); y < d.universe(); y = d.next_from(y + 1)) {
      if (!cache.distances().reachable(x, static_cast<Vertex>(y))) continue;
      if (!cache.interval(x, static_cast<Vertex>(y)).is_subset_of(d)) return false;
    }
  }
  return true;
}

bool is_weakly_convex(const Graph& g, const DistanceMatrix& distances, const VertexSet& d) {
  if (d.count() <= 1) return true;
  VertexSet visited(g.order());
  VertexSet frontier(g.order());
  VertexSet next(g.order());
  for (Vertex u : d) {
    visited.clear();
    frontier.clear();
    visited.insert(u);
    frontier.insert(u);
    for (DistanceMatrix::Distance level = 1; !frontier.empty(); ++level) {
      next.clear();
      for (Vertex x : frontier) next |= g.neighbors(x);
      next &= d;
      next -= visited;
      // Induced distances never undercut global ones, so any member first
      // reached at this level must sit exactly at this global distance.
      for (Vertex y : next) {
        if (distances.at(u, y) != level) return false;
      }
      visited |= next;
      frontier = next;
    }
    if (!(visited == d)) return false;
  }
  return true;
}

bool is_weakly_convex(const IntervalCache& cache, const VertexSet& d) {
  return is_weakly_convex(cache.graph(), cache.distances(), d);
}

bool is_weakly_convex_oracle(const IntervalCache& cache, const VertexSet& d) {
  const Graph& g = cache.graph();
  const DistanceMatrix& dist = cache.distances();
  std::vector<Vertex> path;

  for (Vertex u : d) {
    for (std::size_t vi = d.next_from(u + 1); vi < d.universe(); vi = d.next_from(vi + 1)) {
      const auto v = static_cast<Vertex>(vi);
      if (!dist.reachable(u, v)) return false;
      const auto target = dist.at(u, v);
      bool found = false;
      // Enumerate every u-v geodesic; stop at the first whose vertices all
      // lie in d.
      std::function<void(Vertex)> walk = [&](Vertex x) {
        if (found) return;
        path.push_back(x);
        if (x == v) {
          bool inside = true;
          for (Vertex p : path) inside = inside && d.contains(p);
          found = inside;
        } else {
          for (Vertex y : g.neighbors(x)) {
            if (dist.at(u, y) == dist.at(u, x) + 1 && dist.at(u, y) + dist.at(y, v) == target) {
              walk(y);
            }
          }
        }
        path.pop_back();
      };
      walk(u);
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace owc
