#ifndef TIGHTCYCLE_RNG_HPP
#define TIGHTCYCLE_RNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace tightcycle {

// xoshiro256** seeded through splitmix64. Self-contained so that seeded runs
// are bit-identical across platforms; std:: distributions are not.
//
// Every module derives its own stream from the root seed and a stage name,
// so stage-level reproducibility survives refactors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : root_(seed) {
    std::uint64_t x = seed;
    for (auto& si : s_) si = splitmix(x);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, bound), bound >= 1. Rejection keeps it exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  int below_int(int bound) { return int(below(std::uint64_t(bound))); }

  // Uniform in [0, 1) with 53 bits.
  double unit() { return double(next() >> 11) * 0x1.0p-53; }

  bool coin(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  std::uint64_t root_seed() const { return root_; }

  // Independent stream for a named stage (same root seed -> same stream).
  Rng derive(std::string_view stage, std::uint64_t index = 0) const {
    std::uint64_t h = fnv1a(stage);
    std::uint64_t x = root_ ^ (h + 0x9e3779b97f4a7c15ULL * (index + 1));
    return Rng(splitmix(x));
  }

  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  static std::uint64_t splitmix(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t root_;
  std::uint64_t s_[4];
};

}  // namespace tightcycle

#endif
