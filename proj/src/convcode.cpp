#include "sccc/convcode.hpp"

#include <bit>
#include <stdexcept>

#include "sccc/numerics.hpp"

namespace sccc {

namespace {

constexpr double kNegInf = -1e30;

int parity_of(unsigned x) { return std::popcount(x) & 1; }

}  // namespace

ConvCodeSpec cc_1_5_7() { return ConvCodeSpec{2, 07, {05}, true}; }

ConvCodeSpec cc_5_7() { return ConvCodeSpec{2, 07, {05}, false}; }

Trellis build_trellis(const ConvCodeSpec& spec) {
    if (spec.memory < 1) throw std::invalid_argument("convcode: memory must be >= 1");
    if ((spec.feedback_poly & 1u) == 0)
        throw std::invalid_argument("convcode: feedback polynomial needs its constant term set");
    const unsigned degree_mask = ~((2u << spec.memory) - 1u);
    if (spec.feedback_poly & degree_mask)
        throw std::invalid_argument("convcode: feedback degree exceeds memory");
    if (spec.feedforward_polys.empty())
        throw std::invalid_argument("convcode: at least one feedforward polynomial required");
    for (unsigned p : spec.feedforward_polys)
        if (p & degree_mask) throw std::invalid_argument("convcode: feedforward degree exceeds memory");

    Trellis t;
    t.memory = spec.memory;
    t.n_states = 1 << spec.memory;
    t.systematic = spec.systematic;
    t.n_out = (spec.systematic ? 1 : 0) + static_cast<int>(spec.feedforward_polys.size());
    t.next_state.resize(static_cast<size_t>(t.n_states) * 2);
    t.out_bits.resize(static_cast<size_t>(t.n_states) * 2);

    // State bit i-1 holds the register content w_{t-i}; the recursion is
    //   w_t = u ^ <feedback taps, state>,   next = (state << 1 | w_t) & mask,
    // and each feedforward polynomial p emits p0*w_t ^ <p taps, state>.
    const unsigned state_mask = static_cast<unsigned>(t.n_states - 1);
    const unsigned fb_taps = spec.feedback_poly >> 1;
    for (int s = 0; s < t.n_states; ++s) {
        for (int u = 0; u < 2; ++u) {
            const unsigned w = static_cast<unsigned>(u) ^ parity_of(fb_taps & static_cast<unsigned>(s));
            const unsigned ns = ((static_cast<unsigned>(s) << 1) | w) & state_mask;
            uint16_t out = 0;
            int j = 0;
            if (spec.systematic) out |= static_cast<uint16_t>(u << j++);
            for (unsigned p : spec.feedforward_polys) {
                const int bit = ((p & 1u) & w) ^ parity_of((p >> 1) & static_cast<unsigned>(s));
                out |= static_cast<uint16_t>(bit << j++);
            }
            t.next_state[static_cast<size_t>(s) * 2 + u] = static_cast<uint16_t>(ns);
            t.out_bits[static_cast<size_t>(s) * 2 + u] = out;
        }
    }

    // every state must be reachable from state 0 within `memory` steps
    std::vector<char> reach(static_cast<size_t>(t.n_states), 0);
    reach[0] = 1;
    for (int step = 0; step < t.memory; ++step) {
        std::vector<char> next = reach;
        for (int s = 0; s < t.n_states; ++s)
            if (reach[s])
                for (int u = 0; u < 2; ++u) next[t.next_state[static_cast<size_t>(s) * 2 + u]] = 1;
        reach.swap(next);
    }
    for (char r : reach)
        if (!r) throw std::invalid_argument("convcode: state space not reachable from state 0");
    return t;
}

EncodeResult encode(const Trellis& trellis, const BitVec& info, int start_state) {
    if (start_state < 0 || start_state >= trellis.n_states)
        throw std::invalid_argument("encode: start state out of range");
    EncodeResult r;
    r.coded.resize(info.size() * static_cast<size_t>(trellis.n_out));
    int s = start_state;
    size_t pos = 0;
    for (uint8_t u : info) {
        const size_t e = static_cast<size_t>(s) * 2 + (u & 1);
        const uint16_t out = trellis.out_bits[e];
        for (int j = 0; j < trellis.n_out; ++j) r.coded[pos++] = static_cast<uint8_t>((out >> j) & 1);
        s = trellis.next_state[e];
    }
    r.end_state = s;
    return r;
}

SisoResult siso_decode(const Trellis& trellis, const LlrFrame& prior_in,
                       const LlrFrame& prior_out, int start_state, SisoArithmetic arith) {
    const size_t k = prior_in.size();
    const int n_states = trellis.n_states;
    const int n_out = trellis.n_out;
    if (prior_out.size() != k * static_cast<size_t>(n_out))
        throw std::invalid_argument("siso_decode: prior_out length mismatch");
    if (start_state < 0 || start_state >= n_states)
        throw std::invalid_argument("siso_decode: start state out of range");

    const bool exact = (arith == SisoArithmetic::log_map);
    auto acc = [exact](double a, double b) { return exact ? max_star(a, b) : max_only(a, b); };

    const size_t n_edges = static_cast<size_t>(n_states) * 2;
    std::vector<double> alpha((k + 1) * n_states, kNegInf);
    std::vector<double> gamma(k * n_edges);

    // branch metrics: gamma = sum over edge bits of ±LLR/2, + for bit 0
    for (size_t t = 0; t < k; ++t) {
        const double gin = 0.5 * prior_in[t];
        for (size_t e = 0; e < n_edges; ++e) {
            double g = (e & 1) ? -gin : gin;
            const uint16_t out = trellis.out_bits[e];
            for (int j = 0; j < n_out; ++j) {
                const double h = 0.5 * prior_out[t * n_out + j];
                g += ((out >> j) & 1) ? -h : h;
            }
            gamma[t * n_edges + e] = g;
        }
    }

    alpha[start_state] = 0.0;
    for (size_t t = 0; t < k; ++t) {
        double* a = &alpha[t * n_states];
        double* an = &alpha[(t + 1) * n_states];
        const double* g = &gamma[t * n_edges];
        for (size_t e = 0; e < n_edges; ++e) {
            const int dst = trellis.next_state[e];
            const double cand = a[e >> 1] + g[e];
            an[dst] = (an[dst] == kNegInf) ? cand : acc(an[dst], cand);
        }
        double m = an[0];
        for (int s = 1; s < n_states; ++s) m = m > an[s] ? m : an[s];
        for (int s = 0; s < n_states; ++s) an[s] -= m;  // normalization, cancels in LLRs
    }

    // backward metrics, uniform at the final stage (unterminated trellis)
    std::vector<double> beta((k + 1) * n_states, 0.0);
    for (size_t t = k; t-- > 0;) {
        const double* bn = &beta[(t + 1) * n_states];
        double* b = &beta[t * n_states];
        const double* g = &gamma[t * n_edges];
        for (int s = 0; s < n_states; ++s) {
            const size_t e0 = static_cast<size_t>(s) * 2;
            const double c0 = bn[trellis.next_state[e0]] + g[e0];
            const double c1 = bn[trellis.next_state[e0 + 1]] + g[e0 + 1];
            b[s] = acc(c0, c1);
        }
        double m = b[0];
        for (int s = 1; s < n_states; ++s) m = m > b[s] ? m : b[s];
        for (int s = 0; s < n_states; ++s) b[s] -= m;
    }

    SisoResult res;
    res.extrinsic_in.resize(k);
    res.extrinsic_out.resize(k * static_cast<size_t>(n_out));
    res.app_in.resize(k);
    std::vector<double> metric(n_edges);
    for (size_t t = 0; t < k; ++t) {
        const double* a = &alpha[t * n_states];
        const double* bn = &beta[(t + 1) * n_states];
        const double* g = &gamma[t * n_edges];
        for (size_t e = 0; e < n_edges; ++e)
            metric[e] = a[e >> 1] + g[e] + bn[trellis.next_state[e]];

        double lse0 = kNegInf, lse1 = kNegInf;
        for (size_t e = 0; e < n_edges; ++e) {
            if (e & 1)
                lse1 = (lse1 == kNegInf) ? metric[e] : acc(lse1, metric[e]);
            else
                lse0 = (lse0 == kNegInf) ? metric[e] : acc(lse0, metric[e]);
        }
        res.extrinsic_in[t] = (lse0 - lse1) - prior_in[t];
        res.app_in[t] = prior_in[t] + res.extrinsic_in[t];

        for (int j = 0; j < n_out; ++j) {
            double o0 = kNegInf, o1 = kNegInf;
            for (size_t e = 0; e < n_edges; ++e) {
                if ((trellis.out_bits[e] >> j) & 1)
                    o1 = (o1 == kNegInf) ? metric[e] : acc(o1, metric[e]);
                else
                    o0 = (o0 == kNegInf) ? metric[e] : acc(o0, metric[e]);
            }
            // a bit class can be empty (e.g. parity forced by the state)
            double full;
            if (o0 == kNegInf)
                full = -kLlrClamp * 2;
            else if (o1 == kNegInf)
                full = kLlrClamp * 2;
            else
                full = o0 - o1;
            res.extrinsic_out[t * n_out + j] = full - prior_out[t * n_out + j];
        }
    }
    return res;
}

}  // namespace sccc
