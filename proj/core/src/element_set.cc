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

#include "pregeo/element_set.h"

#include <algorithm>

namespace pregeo {

void ElementSet::const_iterator::Seek() {
  const std::size_t limit = words_->size() * 64;
  while (pos_ < limit) {
    const std::uint64_t rest = (*words_)[pos_ / 64] >> (pos_ % 64);
    if (rest != 0) {
      pos_ += static_cast<std::size_t>(std::countr_zero(rest));
      return;
    }
    pos_ = (pos_ / 64 + 1) * 64;
  }
  pos_ = limit;
}

ElementSet::ElementSet(std::initializer_list<Element> elements) {
  for (Element e : elements) Insert(e);
}

ElementSet::ElementSet(std::span<const Element> elements) {
  for (Element e : elements) Insert(e);
}

ElementSet ElementSet::Range(std::size_t n) {
  ElementSet s;
  s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64 != 0) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

ElementSet ElementSet::FromMask(std::uint64_t mask) {
  ElementSet s;
  if (mask != 0) s.words_.push_back(mask);
  return s;
}

void ElementSet::Insert(Element e) {
  const std::size_t w = e / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (e % 64);
}

void ElementSet::Erase(Element e) {
  const std::size_t w = e / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (e % 64));
  Trim();
}

std::size_t ElementSet::Size() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<Element> ElementSet::Max() const {
  if (words_.empty()) return std::nullopt;
  const std::uint64_t top = words_.back();
  return static_cast<Element>((words_.size() - 1) * 64 + 63 -
                              std::countl_zero(top));
}

std::optional<Element> ElementSet::Min() const {
  if (words_.empty()) return std::nullopt;
  return *begin();
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool ElementSet::Intersects(const ElementSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    words_[i] |= other.words_[i];
  }
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  Trim();
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  Trim();
  return *this;
}

std::vector<Element> ElementSet::Elements() const {
  std::vector<Element> out;
  out.reserve(Size());
  for (Element e : *this) out.push_back(e);
  return out;
}

std::string ElementSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (Element e : *this) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

std::size_t ElementSet::Hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (std::uint64_t w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

void ElementSet::Trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

namespace {

// True iff `s` has a member strictly greater than `e`.
bool HasAbove(const std::vector<std::uint64_t>& words, Element e) {
  std::size_t w = e / 64;
  if (w >= words.size()) return false;
  const unsigned shift = e % 64;
  const std::uint64_t above =
      shift == 63 ? 0 : (words[w] & (~std::uint64_t{0} << (shift + 1)));
  if (above != 0) return true;
  return w + 1 < words.size();
}

}  // namespace

// Let x be the least element of the symmetric difference. The sequences agree
// below x. If x is in a, then b either continues with something larger than
// x (a < b) or stops there (b is a proper prefix, b < a).
bool operator<(const ElementSet& a, const ElementSet& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
    const std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
    const std::uint64_t diff = wa ^ wb;
    if (diff == 0) continue;
    const Element x =
        static_cast<Element>(i * 64 + std::countr_zero(diff));
    if (a.Contains(x)) return HasAbove(b.words_, x);
    return !HasAbove(a.words_, x);
  }
  return false;
}

bool SizeThenLexLess(const ElementSet& a, const ElementSet& b) {
  const std::size_t sa = a.Size();
  const std::size_t sb = b.Size();
  if (sa != sb) return sa < sb;
  return a < b;
}

namespace {

void Extend(const std::vector<Element>& pool, std::size_t start,
            std::size_t remaining, ElementSet& current,
            std::vector<ElementSet>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i + remaining <= pool.size(); ++i) {
    current.Insert(pool[i]);
    Extend(pool, i + 1, remaining - 1, current, out);
    current.Erase(pool[i]);
  }
}

}  // namespace

std::vector<ElementSet> SubsetsUpTo(const ElementSet& universe,
                                    std::size_t max_size) {
  const std::vector<Element> pool = universe.Elements();
  std::vector<ElementSet> out;
  for (std::size_t k = 0; k <= std::min(max_size, pool.size()); ++k) {
    ElementSet current;
    // Recursion in ascending index order yields each size class already in
    // canonical order.
    Extend(pool, 0, k, current, out);
  }
  return out;
}

}  // namespace pregeo
