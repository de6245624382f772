#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sccc {

// Permutation between the upper-code output v and the lower-code input z.
// Convention: permute() writes out[i] = in[perm[i]].
struct Interleaver {
    enum class Kind { identity, random, s_random };

    std::vector<int> perm;
    Kind kind = Kind::identity;
    int s_value = 0;
    uint64_t seed = 0;

    int size() const { return static_cast<int>(perm.size()); }
    std::string describe() const;
};

Interleaver make_identity_interleaver(int n);

// Uniform permutation via an unbiased Fisher-Yates shuffle on the library
// generator; identical (n, seed) always reproduces the same permutation.
Interleaver make_random_interleaver(int n, uint64_t seed);

// S-random: any two inputs within S of each other map at least S+1 apart.
// Randomized greedy insertion with full restarts; throws std::runtime_error
// when the constraint is not met within max_restarts (caller reduces S).
Interleaver make_s_random_interleaver(int n, int s, uint64_t seed, int max_restarts = 100);

template <typename T>
std::vector<T> permute(const Interleaver& ilv, const std::vector<T>& frame) {
    if (frame.size() != ilv.perm.size()) throw std::invalid_argument("permute: length mismatch");
    std::vector<T> out(frame.size());
    for (size_t i = 0; i < frame.size(); ++i) out[i] = frame[ilv.perm[i]];
    return out;
}

template <typename T>
std::vector<T> inverse_permute(const Interleaver& ilv, const std::vector<T>& frame) {
    if (frame.size() != ilv.perm.size())
        throw std::invalid_argument("inverse_permute: length mismatch");
    std::vector<T> out(frame.size());
    for (size_t i = 0; i < frame.size(); ++i) out[ilv.perm[i]] = frame[i];
    return out;
}

void write_interleaver(const Interleaver& ilv, const std::string& path);
Interleaver read_interleaver(const std::string& path);

}  // namespace sccc
