#include "modlex/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "modlex/errors.hpp"

namespace modlex {

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~Word{0};
  if (const std::size_t tail = universe % kWordBits; tail != 0) {
    s.words_.back() = (Word{1} << tail) - 1;
  }
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members) {
  return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > kWordBits) throw PreconditionError("from_mask: universe exceeds 64");
  VertexSet s(universe);
  if (!s.words_.empty()) {
    s.words_[0] = universe == kWordBits ? mask : (mask & ((Word{1} << universe) - 1));
  }
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe_));
  }
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

void VertexSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

std::optional<Vertex> VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Vertex>(w * kWordBits +
                                 static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
  }
  return std::nullopt;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw PreconditionError("vertex sets over different universes (" +
                            std::to_string(universe_) + " vs " +
                            std::to_string(other.universe_) + ")");
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

VertexSet VertexSet::operator~() const { return full(universe_) - *this; }

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  if (other.universe_ != universe_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  std::size_t total = 0;
  for (std::size_t w = 0; w < n; ++w) {
    total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
  }
  return total;
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(s.universe());
  for (VertexSet::Word w : s.words()) {
    h ^= std::hash<VertexSet::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace modlex
