#pragma once

// splitmix64: deterministic across platforms and thread counts.  Property
// suites derive one stream per trial index so parallel scheduling cannot
// change the sampled inputs.

#include <cstdint>

namespace mcg {

struct Rng {
  std::uint64_t s;

  explicit Rng(std::uint64_t seed) : s(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n >= 1
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return next() & 1; }

  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x5851f42d4c957f2dULL * (index + 1)));
    r.next();
    return r;
  }
};

}  // namespace mcg
