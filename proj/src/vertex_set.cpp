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

#include "owc/vertex_set.hpp"

#include <stdexcept>

namespace owc {

VertexSet::VertexSet(std::size_t universe) : universe_(static_cast<std::uint32_t>(universe)) {
  if (universe > kMaxOrder) {
    throw std::length_error("vertex set universe " + std::to_string(universe) +
                            " exceeds maximum order " + std::to_string(kMaxOrder));
  }
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  const std::size_t whole = universe / kWordBits;
  for (std::size_t i = 0; i < whole; ++i) s.words_[i] = ~std::uint64_t{0};
  if (const std::size_t rest = universe % kWordBits; rest != 0) {
    s.words_[whole] = (std::uint64_t{1} << rest) - 1;
  }
  return s;
}

VertexSet VertexSet::from_word(std::size_t universe, std::uint64_t bits) {
  if (universe > kWordBits) throw std::length_error("from_word requires universe <= 64");
  VertexSet s(universe);
  s.words_[0] = universe == kWordBits ? bits : bits & ((std::uint64_t{1} << universe) - 1);
  return s;
}

VertexSet VertexSet::from_vector(std::size_t universe, const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe " +
                            std::to_string(universe_));
  }
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

std::size_t VertexSet::next_from(std::size_t pos) const noexcept {
  if (pos >= universe_) return universe_;
  std::size_t wi = pos / kWordBits;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (pos % kWordBits));
  const std::size_t wc = word_count();
  while (true) {
    if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi >= wc) return universe_;
    w = words_[wi];
  }
}

VertexSet VertexSet::complement() const {
  VertexSet s = full(universe_);
  s -= *this;
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0, w = word_count(); i < w; ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0, w = word_count(); i < w; ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for (Vertex v : *this) {
    if (!first_member) out += ',';
    out += std::to_string(v);
    first_member = false;
  }
  out += '}';
  return out;
}

bool lex_less(const VertexSet& a, const VertexSet& b) noexcept {
  auto ia = a.begin(), ea = a.end();
  auto ib = b.begin(), eb = b.end();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == ea && ib != eb;
}

}  // namespace owc
