#include "sdom/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sdom {

void VertexSet::insert(Vertex v) {
  if (v >= universe_)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe_));
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

void VertexSet::check_compatible(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw std::invalid_argument("vertex sets over different universes");
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.trim();
  return out;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  const std::size_t w = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < w; ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word o = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~o) != 0) return false;
  }
  return true;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const noexcept {
  std::size_t c = 0;
  const std::size_t w = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < w; ++i)
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return universe_;
}

}  // namespace sdom
