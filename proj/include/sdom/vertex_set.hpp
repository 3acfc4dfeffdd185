#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace sdom {

using Vertex = std::size_t;

/// Subset of {0, ..., n-1} stored as packed 64-bit words.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t word_index, Word rest)
        : set_(set), word_index_(word_index), rest_(rest) {
      settle();
    }

    Vertex operator*() const {
      return word_index_ * kWordBits + static_cast<std::size_t>(std::countr_zero(rest_));
    }
    const_iterator& operator++() {
      rest_ &= rest_ - 1;
      settle();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const {
      return word_index_ == other.word_index_ && rest_ == other.rest_;
    }

   private:
    void settle() {
      while (rest_ == 0 && set_ != nullptr && word_index_ + 1 < set_->words_.size()) {
        ++word_index_;
        rest_ = set_->words_[word_index_];
      }
      if (rest_ == 0 && set_ != nullptr) word_index_ = set_->words_.size();
    }

    const VertexSet* set_ = nullptr;
    std::size_t word_index_ = 0;
    Word rest_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  template <typename Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }
  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Throws std::out_of_range when v is not below the universe size.
  void insert(Vertex v);
  void erase(Vertex v);
  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;
  std::size_t intersection_size(const VertexSet& other) const noexcept;

  /// Smallest member, or universe() when empty.
  Vertex first() const noexcept;

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }
  std::span<const Word> words() const noexcept { return words_; }

  const_iterator begin() const {
    return words_.empty() ? end() : const_iterator(this, 0, words_[0]);
  }
  const_iterator end() const { return const_iterator(nullptr, words_.size(), 0); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void trim() noexcept {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }
  void check_compatible(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace sdom
