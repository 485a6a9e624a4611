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

#include "owc/subset_search.hpp"

#include <numeric>
#include <stdexcept>

namespace owc {

std::uint64_t binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i; cancel the common factor
    // first so the multiplication only overflows when the value does.
    const std::uint64_t g = std::gcd(result, std::uint64_t{i});
    const std::uint64_t factor = (n - k + i) / (i / g);
    const std::uint64_t base = result / g;
    if (base >= kBinomialSaturated / factor) return kBinomialSaturated;
    result = base * factor;
  }
  return result;
}

ColexCursor::ColexCursor(std::size_t n, std::size_t k, std::uint64_t rank)
    : n_(n), k_(k), word_mode_(n <= VertexSet::kWordBits), current_(n) {
  if (k > n) throw std::invalid_argument("subset size exceeds universe");
  // Colex unranking via the combinatorial number system:
  // rank = sum_i C(c_i, i) for c_1 < ... < c_k.
  indices_.assign(k, 0);
  for (std::size_t i = k; i >= 1; --i) {
    std::size_t c = i - 1;
    while (c + 1 < n && binomial(c + 1, i) <= rank) ++c;
    rank -= binomial(c, i);
    indices_[i - 1] = static_cast<Vertex>(c);
  }
  if (word_mode_) {
    word_ = 0;
    for (Vertex v : indices_) word_ |= std::uint64_t{1} << v;
    current_ = VertexSet::from_word(n_, word_);
  } else {
    sync_from_indices();
  }
}

bool ColexCursor::advance() {
  if (k_ == 0 || k_ == n_) return false;
  if (word_mode_) {
    const std::uint64_t ones = k_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k_) - 1;
    if (word_ == ones << (n_ - k_)) return false;
    // Gosper's hack: next larger word with the same popcount.
    const std::uint64_t low = word_ & (~word_ + 1);
    const std::uint64_t ripple = word_ + low;
    word_ = (((ripple ^ word_) >> 2) / low) | ripple;
    current_ = VertexSet::from_word(n_, word_);
    return true;
  }
  std::size_t j = 0;
  while (j < k_) {
    const std::size_t limit = j + 1 < k_ ? indices_[j + 1] : n_;
    if (indices_[j] + 1 < limit) break;
    ++j;
  }
  if (j == k_) return false;
  ++indices_[j];
  for (std::size_t i = 0; i < j; ++i) indices_[i] = static_cast<Vertex>(i);
  sync_from_indices();
  return true;
}

void ColexCursor::sync_from_indices() {
  current_.clear();
  for (Vertex v : indices_) current_.insert(v);
}

}  // namespace owc
