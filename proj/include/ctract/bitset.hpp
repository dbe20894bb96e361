#pragma once

#include <cstdint>
#include <vector>

namespace ctract {

// Dense bitset over vertex indices [0, n).  Just the operations the search
// kernels need; iteration goes through first()/next().
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), w_(word_count(n), 0) {}

  int universe() const { return n_; }

  void set(int i) { w_[static_cast<std::size_t>(i >> 6)] |= word{1} << (i & 63); }
  void reset(int i) { w_[static_cast<std::size_t>(i >> 6)] &= ~(word{1} << (i & 63)); }
  bool test(int i) const {
    return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
  }
  void clear() { std::fill(w_.begin(), w_.end(), word{0}); }

  int count() const {
    int c = 0;
    for (word x : w_) c += __builtin_popcountll(x);
    return c;
  }
  bool any() const {
    for (word x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  // set difference: this \ o
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  // true iff o is a subset of this
  bool contains_all(const VertexSet& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (o.w_[k] & ~w_[k]) return false;
    return true;
  }

  // index of the first set bit, -1 when empty
  int first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64) + __builtin_ctzll(w_[k]);
    return -1;
  }
  // first set bit strictly greater than i, -1 when exhausted
  int next(int i) const {
    ++i;
    if (i >= n_) return -1;
    std::size_t k = static_cast<std::size_t>(i >> 6);
    word x = w_[k] >> (i & 63);
    if (x) return i + __builtin_ctzll(x);
    for (++k; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64) + __builtin_ctzll(w_[k]);
    return -1;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

private:
  using word = std::uint64_t;
  static std::size_t word_count(int n) {
    return static_cast<std::size_t>((n + 63) / 64);
  }

  int n_ = 0;
  std::vector<word> w_;
};

}  // namespace ctract
