#pragma once

#include <cstdint>
#include <string>

namespace hgraph {

// Counter-based splittable generator built on the splitmix64 finalizer.
// Every stream is a pure function of (seed, counter), so derived generators
// are reproducible regardless of evaluation order or threading.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  uint64_t next() { return mix(seed_ + (++counter_) * 0x9e3779b97f4a7c15ull); }

  // Uniform value in [0, bound), bound >= 1. Rejection sampling keeps the
  // distribution exact and portable across platforms.
  uint64_t uniform(uint64_t bound) {
    uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound) - 1;
    uint64_t v = next();
    while (v > limit) v = next();
    return v % bound;
  }

  // Inclusive integer range.
  int range(int lo, int hi) { return lo + static_cast<int>(uniform(static_cast<uint64_t>(hi - lo) + 1)); }

  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

  // Independent child stream; children with distinct ids never collide.
  Rng split(uint64_t child) const { return Rng(mix(seed_ ^ mix(child + 0x632be59bd9b4e019ull))); }

  Rng split(const std::string& label) const {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : label) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return split(h);
  }

 private:
  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  uint64_t seed_;
  uint64_t counter_ = 0;
};

}  // namespace hgraph
