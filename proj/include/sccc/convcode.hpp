#pragma once

#include <cstdint>
#include <vector>

namespace sccc {

// Bits are {0,1} everywhere inside the library; the antipodal map 0 -> +1,
// 1 -> -1 is applied only at the channel boundary. LLRs follow
// LLR(b) = ln P(b=+1)/P(b=-1), so positive values favour bit 0. A punctured
// (untransmitted) position carries LLR exactly 0.
using BitVec = std::vector<uint8_t>;
using LlrFrame = std::vector<double>;

// Recursive binary convolutional code given by octal-coded polynomials,
// bit i = coefficient of D^i. The feedback polynomial needs its constant
// term set for the recursion to be realizable.
struct ConvCodeSpec {
    int memory = 0;
    unsigned feedback_poly = 0;
    std::vector<unsigned> feedforward_polys;
    bool systematic = false;
};

// Rate-1/2, 4-state, systematic recursive code CC(1,5/7).
ConvCodeSpec cc_1_5_7();
// Its rate-1 parity-only variant CC(5/7).
ConvCodeSpec cc_5_7();

// Unrolled state machine of a ConvCodeSpec. Edges are indexed by
// state * 2 + input; output bits of an edge are packed LSB-first, with the
// systematic bit (when present) first.
struct Trellis {
    int memory = 0;
    int n_states = 0;
    int n_out = 0;
    bool systematic = false;
    std::vector<uint16_t> next_state;
    std::vector<uint16_t> out_bits;

    int edge_output_bit(int state, int input, int j) const {
        return (out_bits[static_cast<size_t>(state) * 2 + input] >> j) & 1;
    }
};

// Builds the shift-register realization. Throws std::invalid_argument on a
// malformed spec (degree above memory, feedback constant term clear).
Trellis build_trellis(const ConvCodeSpec& spec);

struct EncodeResult {
    BitVec coded;
    int end_state = 0;
};

// Trellis walk from start_state; output length = |info| * n_out. Linear over
// GF(2) from state 0; no termination tail is appended.
EncodeResult encode(const Trellis& trellis, const BitVec& info, int start_state = 0);

enum class SisoArithmetic { log_map, max_log_map };

struct SisoResult {
    LlrFrame extrinsic_in;
    LlrFrame extrinsic_out;
    LlrFrame app_in;  // prior_in + extrinsic_in, exactly
};

// BCJR a-posteriori decoder over one frame. The forward recursion starts in
// start_state with certainty; the backward recursion is initialised uniform
// at the final stage (truncated trellis, no termination). Default arithmetic
// is exact log-MAP (max* with the full correction term); max_log_map drops
// the correction. Extrinsic outputs exclude the direct prior of their own
// bit and nothing else.
SisoResult siso_decode(const Trellis& trellis, const LlrFrame& prior_in,
                       const LlrFrame& prior_out, int start_state = 0,
                       SisoArithmetic arith = SisoArithmetic::log_map);

inline int hard_bit(double llr) { return llr < 0.0 ? 1 : 0; }

}  // namespace sccc
