#ifndef TIGHTCYCLE_BITSET_HPP
#define TIGHTCYCLE_BITSET_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace tightcycle {

// Dense bit-vector over a fixed universe [0, nbits). This is the core set
// representation: codegree queries are popcounts, neighborhood filters are
// single AND+popcount passes over the words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  static Bitset full(int nbits) {
    Bitset b(nbits);
    for (auto& w : b.w_) w = ~std::uint64_t(0);
    b.mask_tail();
    return b;
  }

  int universe() const { return nbits_; }

  bool test(int i) const { return (w_[std::size_t(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[std::size_t(i) >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[std::size_t(i) >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // A shorter operand acts as all-zero beyond its last word.
  Bitset& operator&=(const Bitset& o) {
    const std::size_t k = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
    for (std::size_t i = 0; i < k; ++i) w_[i] &= o.w_[i];
    for (std::size_t i = k; i < w_.size(); ++i) w_[i] = 0;
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    const std::size_t k = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
    for (std::size_t i = 0; i < k; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this \ o
  Bitset& subtract(const Bitset& o) {
    const std::size_t k = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
    for (std::size_t i = 0; i < k; ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  void flip() {
    for (auto& w : w_) w = ~w;
    mask_tail();
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset&) const = default;

  std::span<const std::uint64_t> words() const { return w_; }

  // Visits set bits in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        f(int(wi * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(std::size_t(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  void mask_tail() {
    if (nbits_ % 64 != 0 && !w_.empty())
      w_.back() &= (std::uint64_t(1) << (nbits_ % 64)) - 1;
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

inline int and_count(const Bitset& a, const Bitset& b) {
  auto wa = a.words();
  auto wb = b.words();
  int c = 0;
  const std::size_t k = wa.size() < wb.size() ? wa.size() : wb.size();
  for (std::size_t i = 0; i < k; ++i) c += std::popcount(wa[i] & wb[i]);
  return c;
}

}  // namespace tightcycle

#endif
