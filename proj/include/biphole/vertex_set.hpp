#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace biphole {

// Set of vertices over a fixed universe 0..n-1, stored as bit words.
// The first word lives inline, so sets over universes up to 64 vertices
// never touch the heap and all set operations are a single word op.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : n_(universe), head_(0) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    if (universe > 64) tail_.assign((universe - 1) / 64, 0);
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.add(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    if (universe <= 64) {
      s.head_ = mask_below(universe);
    } else {
      s.head_ = ~0ull;
      for (std::size_t i = 0; i + 1 < s.tail_.size(); ++i) s.tail_[i] = ~0ull;
      s.tail_.back() = mask_below(universe - 64 * static_cast<int>(s.tail_.size()));
    }
    return s;
  }

  int universe() const { return n_; }

  void add(int v) { word(v / 64) |= bit(v); }
  void remove(int v) { word(v / 64) &= ~bit(v); }

  bool contains(int v) const {
    if (v < 0 || v >= n_) return false;
    return (cword(v / 64) & bit(v)) != 0;
  }

  int count() const {
    int c = std::popcount(head_);
    for (std::uint64_t w : tail_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    if (head_) return false;
    for (std::uint64_t w : tail_)
      if (w) return false;
    return true;
  }

  void clear() {
    head_ = 0;
    for (auto& w : tail_) w = 0;
  }

  VertexSet& operator|=(const VertexSet& o) {
    head_ |= o.head_;
    for (std::size_t i = 0; i < tail_.size(); ++i) tail_[i] |= o.tail_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    head_ &= o.head_;
    for (std::size_t i = 0; i < tail_.size(); ++i) tail_[i] &= o.tail_[i];
    return *this;
  }

  // set difference: removes all members of o
  VertexSet& operator-=(const VertexSet& o) {
    head_ &= ~o.head_;
    for (std::size_t i = 0; i < tail_.size(); ++i) tail_[i] &= ~o.tail_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complemented() const {
    VertexSet r(n_);
    r.head_ = ~head_;
    for (std::size_t i = 0; i < tail_.size(); ++i) r.tail_[i] = ~tail_[i];
    r.trim();
    return r;
  }

  bool intersects(const VertexSet& o) const {
    if (head_ & o.head_) return true;
    for (std::size_t i = 0; i < tail_.size(); ++i)
      if (tail_[i] & o.tail_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    if (head_ & ~o.head_) return false;
    for (std::size_t i = 0; i < tail_.size(); ++i)
      if (tail_[i] & ~o.tail_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && head_ == o.head_ && tail_ == o.tail_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // smallest member, or -1 when empty
  int first() const { return next(-1); }

  // smallest member > v, or -1 when none
  int next(int v) const {
    int from = v + 1;
    if (from >= n_) return -1;
    int wi = from / 64;
    std::uint64_t w = cword(wi) & ~mask_below(from % 64);
    while (true) {
      if (w) return wi * 64 + std::countr_zero(w);
      if (++wi > static_cast<int>(tail_.size())) return -1;
      w = cword(wi);
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  // first 64 vertices as a raw mask; enough for the n <= 64 kernels
  std::uint64_t low_word() const { return head_; }

  class iterator {
   public:
    iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = s_->next(v_);
      return *this;
    }
    bool operator!=(const iterator& o) const { return v_ != o.v_; }

   private:
    const VertexSet* s_;
    int v_;
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  static std::uint64_t bit(int v) { return 1ull << (v % 64); }
  static std::uint64_t mask_below(int k) { return k >= 64 ? ~0ull : (1ull << k) - 1; }

  std::uint64_t& word(int i) { return i == 0 ? head_ : tail_[i - 1]; }
  std::uint64_t cword(int i) const { return i == 0 ? head_ : tail_[i - 1]; }

  // clear bits above the universe (after complement)
  void trim() {
    int top_word = n_ <= 64 ? 0 : static_cast<int>(tail_.size());
    int used = n_ - 64 * top_word;
    word(top_word) &= mask_below(used);
    for (std::size_t i = top_word; i < tail_.size(); ++i) tail_[i] = 0;
  }

  int n_ = 0;
  std::uint64_t head_ = 0;
  std::vector<std::uint64_t> tail_;
};

}  // namespace biphole
