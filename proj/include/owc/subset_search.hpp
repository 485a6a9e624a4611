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

#ifndef OWC_SUBSET_SEARCH_HPP_
#define OWC_SUBSET_SEARCH_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "owc/vertex_set.hpp"

namespace owc {

inline constexpr std::uint64_t kBinomialSaturated = std::numeric_limits<std::uint64_t>::max();

// C(n, k), saturating at kBinomialSaturated.
std::uint64_t binomial(std::size_t n, std::size_t k) noexcept;

/**
 * Walks the k-subsets of [0, n) in colexicographic order, starting at a
 * given colex rank. For n <= 64 the subset is a machine word advanced with
 * Gosper's hack; larger universes step an index array.
 */
class ColexCursor {
 public:
  ColexCursor(std::size_t n, std::size_t k, std::uint64_t rank = 0);

  const VertexSet& current() const noexcept { return current_; }
  // False once the last subset has been passed.
  bool advance();

 private:
  void sync_from_indices();

  std::size_t n_;
  std::size_t k_;
  bool word_mode_;
  std::uint64_t word_ = 0;
  std::vector<Vertex> indices_;
  VertexSet current_;
};

namespace detail {

// Splits the colex range of k-subsets into chunks and runs
// `visit(chunk, cursor, count)` for each, on up to `workers` threads.
// Chunks are numbered in colex order; per-chunk results let callers reduce
// deterministically regardless of scheduling.
template <class Visit>
std::size_t for_each_chunk(std::size_t n, std::size_t k, unsigned workers, Visit&& visit) {
  const std::uint64_t total = binomial(n, k);
  if (total == kBinomialSaturated || workers <= 1 || total < 4096) {
    ColexCursor cursor(n, k);
    visit(std::size_t{0}, cursor, total);
    return 1;
  }
  const std::uint64_t chunk_size =
      std::max<std::uint64_t>(1024, total / (std::uint64_t{workers} * 16));
  const std::size_t chunks = static_cast<std::size_t>((total + chunk_size - 1) / chunk_size);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      const std::uint64_t begin = c * chunk_size;
      const std::uint64_t count = std::min(chunk_size, total - begin);
      ColexCursor cursor(n, k, begin);
      visit(c, cursor, count);
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned spawned = static_cast<unsigned>(std::min<std::size_t>(workers, chunks));
    for (unsigned t = 1; t < spawned; ++t) pool.emplace_back(worker);
    worker();
  }
  return chunks;
}

// Upper bound on the number of chunks for_each_chunk may create.
inline std::size_t max_chunks(std::size_t n, std::size_t k, unsigned workers) {
  const std::uint64_t total = binomial(n, k);
  if (total == kBinomialSaturated || workers <= 1 || total < 4096) return 1;
  const std::uint64_t chunk_size =
      std::max<std::uint64_t>(1024, total / (std::uint64_t{workers} * 16));
  return static_cast<std::size_t>((total + chunk_size - 1) / chunk_size);
}

}  // namespace detail

// Lexicographically smallest k-subset of [0, n) satisfying `pred`, scanning
// the whole level. `pred` must be safe to call concurrently. `examined`
// receives the number of subsets tested.
template <class Pred>
std::optional<VertexSet> find_lex_min_subset(std::size_t n, std::size_t k, unsigned workers,
                                             const Pred& pred, std::uint64_t& examined) {
  std::vector<std::optional<VertexSet>> best(detail::max_chunks(n, k, workers));
  std::vector<std::uint64_t> seen(best.size(), 0);
  const std::size_t chunks =
      detail::for_each_chunk(n, k, workers, [&](std::size_t c, ColexCursor& cursor, std::uint64_t count) {
        std::optional<VertexSet> local;
        std::uint64_t tested = 0;
        for (std::uint64_t i = 0; i < count; ++i) {
          const VertexSet& s = cursor.current();
          ++tested;
          if ((!local || lex_less(s, *local)) && pred(s)) local = s;
          if (!cursor.advance()) break;
        }
        best[c] = std::move(local);
        seen[c] = tested;
      });
  std::optional<VertexSet> out;
  for (std::size_t c = 0; c < chunks; ++c) {
    examined += seen[c];
    if (best[c] && (!out || lex_less(*best[c], *out))) out = best[c];
  }
  return out;
}

// Every k-subset satisfying `pred`, in lexicographic order.
template <class Pred>
std::vector<VertexSet> collect_subsets(std::size_t n, std::size_t k, unsigned workers,
                                       const Pred& pred, std::uint64_t& examined) {
  std::vector<std::vector<VertexSet>> found(detail::max_chunks(n, k, workers));
  std::vector<std::uint64_t> seen(found.size(), 0);
  const std::size_t chunks =
      detail::for_each_chunk(n, k, workers, [&](std::size_t c, ColexCursor& cursor, std::uint64_t count) {
        std::uint64_t tested = 0;
        for (std::uint64_t i = 0; i < count; ++i) {
          ++tested;
          if (pred(cursor.current())) found[c].push_back(cursor.current());
          if (!cursor.advance()) break;
        }
        seen[c] = tested;
      });
  std::vector<VertexSet> out;
  for (std::size_t c = 0; c < chunks; ++c) {
    examined += seen[c];
    out.insert(out.end(), found[c].begin(), found[c].end());
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
  return out;
}

}  // namespace owc

#endif  // OWC_SUBSET_SEARCH_HPP_
