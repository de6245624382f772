#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sccc/convcode.hpp"
#include "sccc/interleaving.hpp"
#include "sccc/puncturing.hpp"

namespace sccc {

// Serially concatenated code in its equivalent two-code form. The upper code
// C_U maps the K info bits u to v = [u || P(parity1(u))] of length N = 3K/2,
// where parity1 is the rate-1 CC(5/7) recursion and the fixed puncturer P
// = [1 0] keeps every other parity bit. Transmitted streams: x0 = u (the
// all-ones P0), x1 = P1-selected bits of the kept parity, and x2 =
// P2-selected parity bits of the lower code C_L, a second CC(5/7) run over
// the interleaved z = pi(v). The codeword serializes as [x0, x1, x2].
struct ScccConfig {
    CodeDimensions dims;
    PuncturePattern p1;      // period 100 over the K/2 kept upper parity bits
    PuncturePattern p2;      // period 300 over the N lower parity bits
    Interleaver interleaver; // length N
    Trellis upper_trellis;   // CC(1,5/7)
    Trellis lower_trellis;   // CC(5/7)

    size_t len_x0 = 0, len_x1 = 0, len_x2 = 0;
    size_t total_len() const { return len_x0 + len_x1 + len_x2; }
};

// Validates lengths/permeabilities and precomputes the realized stream
// lengths (exact multiples of the D vector when K is a multiple of 200,
// tiled counts otherwise).
ScccConfig make_sccc_config(const CodeDimensions& dims, const PuncturePattern& p1,
                            const PuncturePattern& p2, const Interleaver& interleaver);

struct Codeword {
    BitVec x0, x1, x2;
    BitVec serialized() const;
};

Codeword sccc_encode(const ScccConfig& cfg, const BitVec& u);

struct DecodeOptions {
    SisoArithmetic arith = SisoArithmetic::log_map;
    bool record_app_per_iteration = false;
    bool record_messages = false;  // per-iteration decoder messages, for diagnostics
    // stop once the systematic APP signs are identical over two consecutive
    // iterations; off by default so reported iteration counts stay fixed
    bool early_stop = false;
};

struct DecodeResult {
    BitVec u_hat;
    int iterations_run = 0;
    std::vector<LlrFrame> app_sys;        // when recorded: systematic APP after each iteration
    std::vector<LlrFrame> msg_to_lower;   // when recorded: pi(lambda_v + E_U), z order
    std::vector<LlrFrame> ext_from_lower; // when recorded: E_L, z order
};

// Iterative decoder: per iteration one lower SISO pass (input priors
// pi(lambda_ch(v) + E_U), output priors lambda_ch of x2) followed by one
// upper SISO pass (output priors lambda_ch(v) + deinterleaved E_L), with E_U
// initialized to zero. Hard decisions come from the systematic APP after the
// final iteration. Combined priors are saturated at +-50 before each pass.
DecodeResult sccc_decode(const ScccConfig& cfg, const LlrFrame& channel_llrs, int n_iterations,
                         const DecodeOptions& opts = {});

// Debug frame dump (u, x0, x1, x2, seed, dims) as a JSON document.
std::string frame_dump_json(const ScccConfig& cfg, const BitVec& u, const Codeword& cw,
                            uint64_t seed);

}  // namespace sccc
