#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace geodekit {

// Subset of a fixed vertex universe 0..n-1, packed into 64-bit words.
// All set algebra stays inside the universe; complement masks the tail.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), w_(word_count(universe), 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& word : s.w_) word = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    assert(0 <= v && v < n_);
    return (w_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  void set(int v) {
    assert(0 <= v && v < n_);
    w_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void reset(int v) {
    assert(0 <= v && v < n_);
    w_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  void clear() {
    for (auto& word : w_) word = 0;
  }

  int count() const {
    int c = 0;
    for (auto word : w_) c += std::popcount(word);
    return c;
  }

  bool empty() const {
    for (auto word : w_) {
      if (word != 0) return false;
    }
    return true;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  // Set difference: removes every member of o.
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(*this);
    for (auto& word : s.w_) word = ~word;
    s.trim();
    return s;
  }

  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] & ~o.w_[i]) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] & o.w_[i]) return true;
    }
    return false;
  }

  int intersection_count(const VertexSet& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  // First member, or -1 when empty.
  int find_first() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    }
    return -1;
  }

  // First member strictly after v, or -1.
  int find_next(int v) const {
    ++v;
    if (v >= n_) return -1;
    std::size_t i = static_cast<std::size_t>(v) >> 6;
    std::uint64_t word = w_[i] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (word) return static_cast<int>(i * 64 + std::countr_zero(word));
      if (++i >= w_.size()) return -1;
      word = w_[i];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = find_first(); v != -1; v = find_next(v)) out.push_back(v);
    return out;
  }

private:
  static std::size_t word_count(int n) {
    assert(n >= 0);
    return (static_cast<std::size_t>(n) + 63) / 64;
  }

  void trim() {
    if (n_ % 64 != 0 && !w_.empty()) {
      w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace geodekit
