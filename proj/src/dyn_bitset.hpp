#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace vint {

// Fixed-capacity bitset sized at runtime. Enough for alive-vertex masks in the
// branching solvers; not a general-purpose container.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void set_all() {
    for (auto& w : w_) w = ~uint64_t(0);
    trim();
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // index of lowest set bit, or -1
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }
  // index of lowest set bit > i, or -1
  int next(int i) const {
    ++i;
    if (i >= n_) return -1;
    size_t word = i >> 6;
    uint64_t w = w_[word] & (~uint64_t(0) << (i & 63));
    while (true) {
      if (w) return int(word * 64 + __builtin_ctzll(w));
      if (++word >= w_.size()) return -1;
      w = w_[word];
    }
  }

  DynBitset& operator&=(const DynBitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  DynBitset& operator-=(const DynBitset& o) {  // set difference
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  bool intersects(const DynBitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const DynBitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const DynBitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const DynBitset& o) const { return !(*this == o); }
  bool operator<(const DynBitset& o) const { return w_ < o.w_; }  // arbitrary total order

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct DynBitsetHash {
  size_t operator()(const DynBitset& b) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t w : b.words()) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return size_t(h);
  }
};

}  // namespace vint
