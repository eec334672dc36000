// Copyright 2026 The nonsep Authors
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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace nonsep {

/// Bitset over the vertex ids 0..universe-1 of one graph.
///
/// Universes up to 128 vertices live inline; larger ones spill to the heap.
/// Binary operations require both operands to share a universe.
class VertexSet {
 public:
  using Word = std::uint64_t;

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~Word{0};
    s.trim();
    return s;
  }
  static VertexSet from(int universe, std::span<const int> members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int v) const {
    return v >= 0 && v < universe_ && ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U);
  }
  void insert(int v) { words_[static_cast<std::size_t>(v) >> 6] |= Word{1} << (v & 63); }
  void erase(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(Word{1} << (v & 63)); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or -1.
  int first() const { return next(-1); }

  /// Smallest member strictly greater than v, or -1.
  int next(int v) const {
    int start = v + 1;
    if (start >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(start) >> 6;
    Word w = words_[wi] & (~Word{0} << (start & 63));
    while (true) {
      if (w != 0) return static_cast<int>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Members in increasing order.
  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  /// Raw word access; bit i of word i/64 is vertex i.
  std::span<const Word> words() const { return {words_.data(), words_.size()}; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const VertexSet* set, int v) : set_(set), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  static std::size_t word_count(int universe) { return static_cast<std::size_t>((universe + 63) / 64); }
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (Word{1} << (universe_ % 64)) - 1;
  }

  int universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

/// Orders sets by their sorted member lists, lexicographically.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  int x = a.first();
  int y = b.first();
  while (x >= 0 && y >= 0) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x < 0 && y >= 0;
}

}  // namespace nonsep
