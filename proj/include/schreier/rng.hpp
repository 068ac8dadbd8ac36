#ifndef SCHREIER_RNG_HPP
#define SCHREIER_RNG_HPP

#include <cstdint>

namespace schreier {

/// Deterministic splitmix64 generator. Randomized searches take an explicit
/// seed and replay byte-identically on any platform.
class SmallRng {
 public:
  explicit SmallRng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n).
  int upto(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
  /// Uniform value in [lo, hi].
  int range(int lo, int hi) { return lo + upto(hi - lo + 1); }

 private:
  uint64_t state_;
};

}  // namespace schreier

#endif
