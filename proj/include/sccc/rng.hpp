#pragma once

#include <cstdint>

namespace sccc {

// Deterministic PRNG used everywhere randomness is needed: xoshiro256++ 1.0
// seeded through the SplitMix64 finalizer. Unlike the <random> distributions,
// every draw here is fully specified, so seeded artifacts reproduce across
// platforms and standard-library versions.
class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();

    // uniform in [0, 1), 53-bit resolution
    double next_double();

    // unbiased uniform integer in [0, n), n >= 1
    uint64_t next_below(uint64_t n);

    int next_bit() { return static_cast<int>(next_u64() >> 63); }

    // standard normal via Box-Muller on two uniform draws
    double next_gaussian();

    // Sub-stream seed for (master, index): the index-th output of the
    // SplitMix64 sequence started at `master`. This is the documented split
    // rule for per-frame / per-grid-cell streams.
    static uint64_t derive(uint64_t master, uint64_t index);

private:
    uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace sccc
