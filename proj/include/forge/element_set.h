// Copyright 2026 The Authors.
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

#ifndef FORGE_ELEMENT_SET_H_
#define FORGE_ELEMENT_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace forge {

// Dense element index into a ground set.
using ElementId = int;

// Largest ground set representable by ElementSet.
inline constexpr int kMaxGroundSize = 32;

// A subset of a ground set of at most kMaxGroundSize elements, stored as a
// bit mask. Iteration yields element ids in increasing order.
class ElementSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = const ElementId*;
    using reference = ElementId;

    Iterator() = default;
    explicit Iterator(std::uint32_t rest) : rest_(rest) {}
    ElementId operator*() const { return std::countr_zero(rest_); }
    Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator&) const = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<ElementId> ids) {
    for (ElementId id : ids) Insert(id);
  }

  static constexpr ElementSet Singleton(ElementId id) {
    return ElementSet(std::uint32_t{1} << id);
  }
  // The set {0, 1, ..., n-1}.
  static constexpr ElementSet Range(int n) {
    return ElementSet(n >= 32 ? ~std::uint32_t{0}
                              : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool Contains(ElementId id) const { return (bits_ >> id) & 1u; }
  constexpr bool IsSubsetOf(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Smallest element; the set must be nonempty.
  constexpr ElementId First() const { return std::countr_zero(bits_); }

  void Insert(ElementId id) { bits_ |= std::uint32_t{1} << id; }
  void Erase(ElementId id) { bits_ &= ~(std::uint32_t{1} << id); }

  constexpr ElementSet With(ElementId id) const {
    return ElementSet(bits_ | (std::uint32_t{1} << id));
  }
  constexpr ElementSet Without(ElementId id) const {
    return ElementSet(bits_ & ~(std::uint32_t{1} << id));
  }

  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }

  std::vector<ElementId> ToVector() const {
    return std::vector<ElementId>(begin(), end());
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ ^ b.bits_);
  }
  ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  // Bit-pattern order; used only for associative containers.
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Lexicographic order on the increasing element lists of two sets; a proper
// prefix sorts first.
constexpr bool LexLess(ElementSet a, ElementSet b) {
  const std::uint32_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int x = std::countr_zero(diff);
  if (a.Contains(x)) {
    // b's list continues past the common prefix with something larger than
    // x unless it has ended.
    return (b.bits() >> x) != 0;
  }
  return (a.bits() >> x) == 0;
}

// Order by size, then lexicographically. This is the canonical order of
// every circuit and cocircuit family.
constexpr bool CanonicalLess(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return LexLess(a, b);
}

}  // namespace forge

#endif  // FORGE_ELEMENT_SET_H_
