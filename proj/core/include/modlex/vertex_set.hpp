#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace modlex {

using Vertex = std::uint32_t;

/// A set of vertex ids drawn from a fixed universe {0..universe-1}, stored as
/// a dense bitset. Used for induced subgraphs, modules, deletion sets and
/// adjacency rows alike.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  static VertexSet full(std::size_t universe);
  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members);
  static VertexSet of(std::size_t universe, std::span<const Vertex> members);
  /// Builds the set from the low bits of `mask` (universe must be <= 64).
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  /// Throws PreconditionError if v is outside the universe.
  void insert(Vertex v);
  void erase(Vertex v);
  void clear() noexcept;

  std::optional<Vertex> first() const noexcept;
  std::vector<Vertex> members() const;
  /// Low 64 bits; only meaningful when universe <= 64.
  std::uint64_t to_mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(static_cast<Vertex>(w * kWordBits + bit));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  /// Set complement within the universe.
  VertexSet operator~() const;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;
  /// Size of the intersection without materializing it.
  std::size_t intersection_size(const VertexSet& other) const noexcept;

  /// Lexicographic comparison of the sorted member lists.
  static bool lex_less(const VertexSet& a, const VertexSet& b);

  std::span<const Word> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept;
};

}  // namespace modlex
