#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace longcycles {

using Vertex = int;

// Fixed-capacity bitset over dense vertex ids 0..kCapacity-1. All vertex sets
// in the library are values of this type; set semantics only.
class VertexSet {
 public:
  static constexpr int kCapacity = 128;
  static constexpr int kWords = kCapacity / 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) { advance_to_set_bit(); }

    Vertex operator*() const { return pos_; }
    iterator& operator++() {
      ++pos_;
      advance_to_set_bit();
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& other) const { return pos_ == other.pos_; }

   private:
    void advance_to_set_bit() {
      while (pos_ < kCapacity) {
        const int word = pos_ >> 6;
        const std::uint64_t bits = set_->words_[word] >> (pos_ & 63);
        if (bits != 0) {
          pos_ += std::countr_zero(bits);
          return;
        }
        pos_ = (word + 1) << 6;
      }
      pos_ = kCapacity;
    }

    const VertexSet* set_ = nullptr;
    int pos_ = kCapacity;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vertices) {
    for (Vertex v : vertices) insert(v);
  }
  template <typename Range>
  static VertexSet of(const Range& range) {
    VertexSet s;
    for (Vertex v : range) s.insert(v);
    return s;
  }
  // {0, 1, ..., n-1}
  static VertexSet prefix(int n) {
    VertexSet s;
    for (Vertex v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  void insert(Vertex v) {
    check(v);
    words_[v >> 6] |= bit(v);
  }
  void erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~bit(v);
  }
  [[nodiscard]] bool contains(Vertex v) const {
    if (v < 0 || v >= kCapacity) return false;
    return (words_[v >> 6] & bit(v)) != 0;
  }

  [[nodiscard]] int size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }
  [[nodiscard]] bool empty() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  // Smallest member, or -1 when empty.
  [[nodiscard]] Vertex min() const {
    auto it = begin();
    return it == end() ? -1 : *it;
  }

  [[nodiscard]] bool intersects(const VertexSet& other) const {
    for (int i = 0; i < kWords; ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }
  [[nodiscard]] bool is_subset_of(const VertexSet& other) const {
    for (int i = 0; i < kWords; ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Lexicographic order on the sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
      if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
  }

  [[nodiscard]] iterator begin() const { return iterator(this, 0); }
  [[nodiscard]] iterator end() const { return iterator(this, kCapacity); }

  [[nodiscard]] std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  [[nodiscard]] const std::array<std::uint64_t, kWords>& words() const { return words_; }

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }
  static void check(Vertex v) {
    if (v < 0 || v >= kCapacity) throw std::out_of_range("vertex id outside VertexSet capacity");
  }

  std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    std::size_t h = 0;
    for (std::uint64_t w : s.words()) h = h * 0x9e3779b97f4a7c15ULL ^ (w + (h >> 7));
    return h;
  }
};

}  // namespace longcycles
