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

#ifndef OWC_VERTEX_SET_HPP_
#define OWC_VERTEX_SET_HPP_

#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace owc {

using Vertex = std::uint32_t;

// Largest order any Graph or VertexSet may have. Orders up to 64 use a
// single machine word; larger orders fall back to multi-word loops.
inline constexpr std::size_t kMaxOrder = 1024;

// Fixed-capacity bit-vector over the vertex ids [0, universe).
//
// All binary operations require both operands to share the same universe.
// Bits at positions >= universe are always zero.
class VertexSet {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kMaxWords = kMaxOrder / kWordBits;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++() {
      pos_ = set_->next_from(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  // Empty set over [0, universe). Throws std::length_error past kMaxOrder.
  explicit VertexSet(std::size_t universe);
  // Throws std::out_of_range for members >= universe.
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);
  // Low `universe` bits of `bits`; requires universe <= 64.
  static VertexSet from_word(std::size_t universe, std::uint64_t bits);
  static VertexSet from_vector(std::size_t universe, const std::vector<Vertex>& members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t word_count() const noexcept { return (universe_ + kWordBits - 1) / kWordBits; }
  std::uint64_t word(std::size_t i) const noexcept { return words_[i]; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0, w = word_count(); i < w; ++i) c += std::popcount(words_[i]);
    return c;
  }
  bool empty() const noexcept {
    for (std::size_t i = 0, w = word_count(); i < w; ++i)
      if (words_[i] != 0) return false;
    return true;
  }
  bool contains(Vertex v) const noexcept {
    assert(v < universe_);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  void insert(Vertex v);
  void erase(Vertex v);
  void clear() noexcept { words_.fill(0); }

  // Smallest member >= pos, or universe() if none.
  std::size_t next_from(std::size_t pos) const noexcept;
  std::size_t first() const noexcept { return next_from(0); }

  const_iterator begin() const { return const_iterator(this, first()); }
  const_iterator end() const { return const_iterator(this, universe_); }

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  VertexSet& operator|=(const VertexSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0, w = word_count(); i < w; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0, w = word_count(); i < w; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0, w = word_count(); i < w; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0, w = word_count(); i < w; ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) noexcept { return a ^= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    if (a.universe_ != b.universe_) return false;
    for (std::size_t i = 0, w = a.word_count(); i < w; ++i)
      if (a.words_[i] != b.words_[i]) return false;
    return true;
  }

  std::vector<Vertex> to_vector() const;
  // "{0,2,5}"
  std::string to_string() const;

 private:
  std::array<std::uint64_t, kMaxWords> words_{};
  std::uint32_t universe_ = 0;
};

// Lexicographic order on the sorted member lists (a proper prefix sorts
// first). This is the order that defines canonical witnesses.
bool lex_less(const VertexSet& a, const VertexSet& b) noexcept;

}  // namespace owc

#endif  // OWC_VERTEX_SET_HPP_
