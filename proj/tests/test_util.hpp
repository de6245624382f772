#pragma once

// Shared test oracles. Everything here recomputes results through a
// different route than the library code it checks: literal shift-register
// simulation instead of trellis tables, exhaustive enumeration instead of
// dynamic programming, direct classical-form encoding instead of the
// equivalent-form encoder.

#include <cmath>
#include <cstdint>
#include <vector>

#include "sccc/convcode.hpp"
#include "sccc/interleaving.hpp"
#include "sccc/numerics.hpp"
#include "sccc/puncturing.hpp"
#include "sccc/rng.hpp"
#include "sccc/sccc_code.hpp"

namespace testutil {

using namespace sccc;

inline BitVec random_bits(size_t n, Rng& rng) {
    BitVec b(n);
    for (auto& v : b) v = static_cast<uint8_t>(rng.next_bit());
    return b;
}

// ---------------------------------------------------------------------------
// Shift-register encoder oracle: simulates the registers bit by bit from the
// polynomials, no trellis involved.
struct RegisterOracle {
    int memory;
    unsigned feedback;
    std::vector<unsigned> feedforward;
    bool systematic;
    std::vector<int> reg;  // reg[0] = most recent

    explicit RegisterOracle(const ConvCodeSpec& spec)
        : memory(spec.memory),
          feedback(spec.feedback_poly),
          feedforward(spec.feedforward_polys),
          systematic(spec.systematic),
          reg(static_cast<size_t>(spec.memory), 0) {}

    void set_state(int s) {
        for (int i = 0; i < memory; ++i) reg[static_cast<size_t>(i)] = (s >> i) & 1;
    }
    int state() const {
        int s = 0;
        for (int i = 0; i < memory; ++i) s |= reg[static_cast<size_t>(i)] << i;
        return s;
    }

    std::vector<int> step(int u) {
        int w = u;
        for (int i = 1; i <= memory; ++i)
            if ((feedback >> i) & 1) w ^= reg[static_cast<size_t>(i - 1)];
        std::vector<int> out;
        if (systematic) out.push_back(u);
        for (unsigned p : feedforward) {
            int bit = (p & 1) ? w : 0;
            for (int i = 1; i <= memory; ++i)
                if ((p >> i) & 1) bit ^= reg[static_cast<size_t>(i - 1)];
            out.push_back(bit);
        }
        for (int i = memory - 1; i > 0; --i) reg[static_cast<size_t>(i)] = reg[static_cast<size_t>(i - 1)];
        if (memory > 0) reg[0] = w;
        return out;
    }
};

// ---------------------------------------------------------------------------
// Brute-force bitwise MAP marginals over all 2^K input sequences.
inline LlrFrame brute_force_map(const Trellis& t, const LlrFrame& prior_in,
                                const LlrFrame& prior_out) {
    const int k = static_cast<int>(prior_in.size());
    LlrFrame app(static_cast<size_t>(k));
    for (int bit = 0; bit < k; ++bit) {
        double lse0 = -1e300, lse1 = -1e300;
        for (uint32_t x = 0; x < (1u << k); ++x) {
            BitVec u(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) u[static_cast<size_t>(i)] = (x >> i) & 1;
            const auto enc = encode(t, u);
            double metric = 0.0;
            for (int i = 0; i < k; ++i)
                metric += (u[static_cast<size_t>(i)] ? -0.5 : 0.5) * prior_in[static_cast<size_t>(i)];
            for (size_t i = 0; i < enc.coded.size(); ++i)
                metric += (enc.coded[i] ? -0.5 : 0.5) * prior_out[i];
            double& acc = u[static_cast<size_t>(bit)] ? lse1 : lse0;
            acc = acc < -1e299 ? metric : max_star(acc, metric);
        }
        app[static_cast<size_t>(bit)] = lse0 - lse1;
    }
    return app;
}

// ---------------------------------------------------------------------------
// Classical-form reference encoder (one interleaver between the codes): outer CC(1,5/7) + Pa = [1 1 1 0], inner
// systematic CC(1,5/7) with Pb^s / Pb^p. The interleaver is composed so the
// inner input matches z of the equivalent form, and the inner systematic
// survivors are collected in v-domain order, which makes the output
// byte-comparable with the equivalent encoder's [x0, x1, x2].
inline BitVec classical_reference_encode(const ScccConfig& cfg, const BitVec& u) {
    const int k = cfg.dims.k;
    const int n = cfg.dims.n();
    const Trellis cc = build_trellis(cc_1_5_7());

    // outer code: serialize (sys, par) pairs, apply Pa = [1 1 1 0]
    const BitVec outer = encode(cc, u).coded;  // s0 p0 s1 p1 ...
    BitVec v_classical;
    v_classical.reserve(static_cast<size_t>(n));
    for (int t = 0; t < k; ++t) {
        v_classical.push_back(outer[static_cast<size_t>(2 * t)]);
        if (t % 2 == 0) v_classical.push_back(outer[static_cast<size_t>(2 * t + 1)]);
    }

    // reorder the classical v (s0 p0 s1 | s2 p2 s3 ...) into the equivalent form
    // [u || kept parity], then interleave with the configured permutation
    std::vector<int> order(static_cast<size_t>(n));
    for (int t = 0; t < k; ++t) order[static_cast<size_t>(t)] = 3 * (t / 2) + 2 * (t % 2);
    for (int j = 0; j < k / 2; ++j) order[static_cast<size_t>(k + j)] = 3 * j + 1;
    BitVec v_equiv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        v_equiv[static_cast<size_t>(i)] = v_classical[static_cast<size_t>(order[static_cast<size_t>(i)])];

    const BitVec z = permute(cfg.interleaver, v_equiv);

    // inner code: systematic out = z, parity out punctured by Pb^p = P2
    const BitVec inner = encode(cc, z).coded;
    // Pb^s keeps the z positions whose v-preimage is transmitted (all info
    // positions, P1-kept parity positions); collect them in v order = x0, x1
    BitVec keep_v(static_cast<size_t>(n), 0);
    for (int t = 0; t < k; ++t) keep_v[static_cast<size_t>(t)] = 1;
    for (int j = 0; j < k / 2; ++j)
        keep_v[static_cast<size_t>(k + j)] = cfg.p1.kept(static_cast<size_t>(j)) ? 1 : 0;

    BitVec out;
    for (int i = 0; i < n; ++i)
        if (keep_v[static_cast<size_t>(i)]) out.push_back(v_equiv[static_cast<size_t>(i)]);
    for (int t = 0; t < n; ++t)
        if (cfg.p2.kept(static_cast<size_t>(t))) out.push_back(inner[static_cast<size_t>(2 * t + 1)]);
    return out;
}

}  // namespace testutil
