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

#ifndef PREGEO_ELEMENT_SET_H_
#define PREGEO_ELEMENT_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pregeo {

using Element = std::uint32_t;

// A finite set of element indices backed by a dynamic bitset.
//
// The word vector never carries trailing zero words, so defaulted equality
// is set equality. operator< is the canonical order used in every report:
// lexicographic comparison of the ascending element sequences (so {} < {0}
// < {0,1,2} < {0,3} < {1}).
class ElementSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    const_iterator() = default;
    const_iterator(const std::vector<std::uint64_t>* words, std::size_t pos)
        : words_(words), pos_(pos) {
      Seek();
    }

    Element operator*() const { return static_cast<Element>(pos_); }
    const_iterator& operator++() {
      ++pos_;
      Seek();
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const {
      return pos_ == other.pos_;
    }

   private:
    void Seek();

    const std::vector<std::uint64_t>* words_ = nullptr;
    std::size_t pos_ = 0;
  };

  ElementSet() = default;
  ElementSet(std::initializer_list<Element> elements);
  explicit ElementSet(std::span<const Element> elements);

  // {0, 1, ..., n-1}.
  static ElementSet Range(std::size_t n);
  // Bit i of `mask` set <=> i in the set.
  static ElementSet FromMask(std::uint64_t mask);

  bool Contains(Element e) const {
    const std::size_t w = e / 64;
    return w < words_.size() && ((words_[w] >> (e % 64)) & 1u) != 0;
  }
  void Insert(Element e);
  void Erase(Element e);

  bool Empty() const { return words_.empty(); }
  std::size_t Size() const;
  // Largest member; nullopt for the empty set.
  std::optional<Element> Max() const;
  std::optional<Element> Min() const;

  bool IsSubsetOf(const ElementSet& other) const;
  bool Intersects(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    return a |= b;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    return a &= b;
  }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) {
    return a -= b;
  }
  // this ∪ {e}
  ElementSet With(Element e) const {
    ElementSet copy = *this;
    copy.Insert(e);
    return copy;
  }

  const_iterator begin() const { return const_iterator(&words_, 0); }
  const_iterator end() const {
    return const_iterator(&words_, words_.size() * 64);
  }
  std::vector<Element> Elements() const;

  // Low 64 members as a mask; only meaningful when Max() < 64.
  std::uint64_t Mask() const { return words_.empty() ? 0 : words_[0]; }

  // "{0,1,2}" with members ascending.
  std::string ToString() const;

  std::size_t Hash() const;

  bool operator==(const ElementSet& other) const = default;
  friend bool operator<(const ElementSet& a, const ElementSet& b);
  friend bool operator>(const ElementSet& a, const ElementSet& b) {
    return b < a;
  }
  friend bool operator<=(const ElementSet& a, const ElementSet& b) {
    return !(b < a);
  }

 private:
  void Trim();

  std::vector<std::uint64_t> words_;
};

// Orders by size first, then canonically. This is the (|A|, A) order used
// when reporting least witnesses.
bool SizeThenLexLess(const ElementSet& a, const ElementSet& b);

// All subsets of `universe` with at most `max_size` members, in (|A|, A)
// order.
std::vector<ElementSet> SubsetsUpTo(const ElementSet& universe,
                                    std::size_t max_size);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.Hash(); }
};

}  // namespace pregeo

#endif  // PREGEO_ELEMENT_SET_H_
