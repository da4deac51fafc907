#pragma once

#include <cstdint>

namespace moser {

// SplitMix64. Used for all sampling so that reports are byte-identical
// across platforms; std::uniform_int_distribution is implementation-defined
// and must not appear anywhere on a report-producing path.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0. Rejection sampling keeps it exactly uniform.
    uint64_t below(uint64_t n) {
        uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % n;
        uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % n;
    }

    bool coin() { return next() >> 63; }

    // Stream-splitting rule for parallel jobs: job k draws from an
    // independent stream derived as splitmix(seed XOR (k+1)*phi64).
    static SplitMix64 stream(uint64_t seed, uint64_t job) {
        SplitMix64 s(seed ^ ((job + 1) * 0x9e3779b97f4a7c15ull));
        s.next();
        return s;
    }

  private:
    uint64_t state_;
};

}  // namespace moser
