#include "ktuple/vertex_set.hpp"

#include <stdexcept>
#include <string>

#include "ktuple/errors.hpp"

namespace ktuple {

namespace {

std::size_t blocks_for(std::size_t universe) {
  return (universe + VertexSet::kBlockBits - 1) / VertexSet::kBlockBits;
}

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), blocks_(blocks_for(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& b : s.blocks_) b = ~Block{0};
  s.trim_tail();
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for universe of size " +
                     std::to_string(universe_));
  }
  blocks_[v / kBlockBits] |= Block{1} << (v % kBlockBits);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  blocks_[v / kBlockBits] &= ~(Block{1} << (v % kBlockBits));
}

void VertexSet::clear() noexcept {
  for (auto& b : blocks_) b = 0;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (Block b : blocks_) total += static_cast<std::size_t>(std::popcount(b));
  return total;
}

bool VertexSet::empty() const noexcept {
  for (Block b : blocks_)
    if (b != 0) return false;
  return true;
}

std::size_t VertexSet::count_common(const VertexSet& other) const {
  check_same_universe(other);
  std::size_t total = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) total += static_cast<std::size_t>(std::popcount(blocks_[i] & other.blocks_[i]));
  return total;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if ((blocks_[i] & other.blocks_[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if ((blocks_[i] & ~other.blocks_[i]) != 0) return false;
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~other.blocks_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) out.blocks_[i] = ~blocks_[i];
  out.trim_tail();
  return out;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("vertex sets over different universes (" + std::to_string(universe_) + " vs " +
                                std::to_string(other.universe_) + ")");
  }
}

void VertexSet::trim_tail() noexcept {
  const std::size_t rem = universe_ % kBlockBits;
  if (rem != 0 && !blocks_.empty()) blocks_.back() &= (Block{1} << rem) - 1;
}

}  // namespace ktuple
