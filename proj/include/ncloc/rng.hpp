#pragma once

#include <cstdint>

namespace ncloc {

// splitmix64: tiny deterministic generator. std::mt19937 plus the standard
// distributions are implementation-defined across library versions; report
// determinism requires bit-stable streams, so we roll the classic mixer.
class rng {
  public:
    explicit rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0; modulo bias is irrelevant at our ranges
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // uniform integer in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

}  // namespace ncloc
