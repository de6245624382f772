#pragma once

#include <cstdint>
#include <vector>

#include "sccc/convcode.hpp"

namespace sccc {

// BPSK over AWGN with unit-energy antipodal symbols (0 -> +1, 1 -> -1) and
// noise variance sigma2 = N0/(2 R Eb) = 1/(2 R 10^(EbN0_dB/10)).
struct ChannelParams {
    double eb_n0_db = 0.0;
    double rate = 1.0;
    double sigma2 = 0.5;

    static ChannelParams from_ebn0(double eb_n0_db, double rate);
};

// y = x + n with seeded Gaussian noise; sigma2 = 0 gives the noiseless limit.
std::vector<double> transmit(const BitVec& bits, const ChannelParams& params, uint64_t seed);

// Matched-filter LLRs 2 y / sigma2, saturated at +-50. Requires sigma2 > 0.
LlrFrame channel_llrs(const std::vector<double>& y, double sigma2);

// Mutual information of BPSK over AWGN at noise variance sigma2.
double bpsk_capacity(double sigma2);

// Minimum Eb/N0 (dB) at which BPSK-input mutual information reaches `rate`,
// to 0.01 dB. Throws std::runtime_error when no root exists in the bracket.
double bpsk_ebn0_limit_db(double rate);

// eb_n0_db minus the BPSK capacity limit for this rate.
double bpsk_capacity_gap_db(double rate, double eb_n0_db);

}  // namespace sccc
