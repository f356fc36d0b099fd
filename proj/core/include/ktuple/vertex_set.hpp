#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace ktuple {

using Vertex = std::uint32_t;

/// Subset of the vertices 0..universe-1 of a graph, stored as 64-bit blocks.
///
/// Every set carries the size of the universe it was built for; binary
/// operations require matching universes. Intersection counting is a
/// popcount loop, which is what the solvers spend most of their time on.
class VertexSet {
 public:
  using Block = std::uint64_t;
  static constexpr std::size_t kBlockBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((blocks_[v / kBlockBits] >> (v % kBlockBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear() noexcept;

  std::size_t size() const noexcept;
  bool empty() const noexcept;

  /// |*this ∩ other|
  std::size_t count_common(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Sorted member list.
  std::vector<Vertex> to_vector() const;

  std::span<const Block> blocks() const noexcept { return blocks_; }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t block) : set_(set), block_(block) {
      if (set_ != nullptr && block_ < set_->blocks_.size()) {
        word_ = set_->blocks_[block_];
        advance_to_set_bit();
      }
    }

    Vertex operator*() const noexcept {
      return static_cast<Vertex>(block_ * kBlockBits + static_cast<std::size_t>(std::countr_zero(word_)));
    }
    const_iterator& operator++() {
      word_ &= word_ - 1;
      advance_to_set_bit();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) noexcept {
      return a.block_ == b.block_ && a.word_ == b.word_;
    }

   private:
    void advance_to_set_bit() {
      while (word_ == 0 && ++block_ < set_->blocks_.size()) word_ = set_->blocks_[block_];
      if (word_ == 0) block_ = set_->blocks_.size();
    }

    const VertexSet* set_ = nullptr;
    std::size_t block_ = 0;
    Block word_ = 0;
  };

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, blocks_.size()); }

 private:
  void check_same_universe(const VertexSet& other) const;
  void trim_tail() noexcept;

  std::size_t universe_ = 0;
  std::vector<Block> blocks_;
};

}  // namespace ktuple
