#include "sccc/sccc_code.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sccc/numerics.hpp"

namespace sccc {

ScccConfig make_sccc_config(const CodeDimensions& dims, const PuncturePattern& p1,
                            const PuncturePattern& p2, const Interleaver& interleaver) {
    if (p1.np() != 100) throw std::invalid_argument("sccc: P1 pattern period must be 100");
    if (p2.np() != 300) throw std::invalid_argument("sccc: P2 pattern period must be 300");
    const int k = dims.k;
    const int n = dims.n();
    if (interleaver.size() != n)
        throw std::invalid_argument("sccc: interleaver length must be N = 3K/2");

    ScccConfig cfg;
    cfg.dims = dims;
    cfg.p1 = p1;
    cfg.p2 = p2;
    cfg.interleaver = interleaver;
    cfg.upper_trellis = build_trellis(cc_1_5_7());
    cfg.lower_trellis = build_trellis(cc_5_7());
    cfg.len_x0 = static_cast<size_t>(k);
    cfg.len_x1 = p1.kept_count(static_cast<size_t>(k) / 2);
    cfg.len_x2 = p2.kept_count(static_cast<size_t>(n));

    if (p1.ones() != dims.d1 || p2.ones() != dims.d2)
        throw std::invalid_argument("sccc: pattern kept counts disagree with D vector");
    if (k % 200 == 0) {
        const size_t periods = static_cast<size_t>(k) / 200;
        if (cfg.len_x1 != periods * static_cast<size_t>(dims.d1) ||
            cfg.len_x2 != periods * static_cast<size_t>(dims.d2))
            throw std::logic_error("sccc: realized stream lengths disagree with D vector");
    }
    return cfg;
}

BitVec Codeword::serialized() const {
    BitVec out;
    out.reserve(x0.size() + x1.size() + x2.size());
    out.insert(out.end(), x0.begin(), x0.end());
    out.insert(out.end(), x1.begin(), x1.end());
    out.insert(out.end(), x2.begin(), x2.end());
    return out;
}

Codeword sccc_encode(const ScccConfig& cfg, const BitVec& u) {
    const size_t k = static_cast<size_t>(cfg.dims.k);
    if (u.size() != k) throw std::invalid_argument("sccc_encode: |u| must equal K");

    // rate-1 parity of the upper recursion, P = [1 0] keeps even positions
    const BitVec par1 = encode(cfg.lower_trellis, u).coded;
    BitVec v(u);
    v.resize(k + k / 2);
    for (size_t j = 0; j < k / 2; ++j) v[k + j] = par1[2 * j];

    Codeword cw;
    cw.x0 = u;
    cw.x1 = apply_pattern(cfg.p1, BitVec(v.begin() + static_cast<long>(k), v.end()));

    const BitVec z = permute(cfg.interleaver, v);
    const BitVec par2 = encode(cfg.lower_trellis, z).coded;
    cw.x2 = apply_pattern(cfg.p2, par2);

    if (cw.x0.size() != cfg.len_x0 || cw.x1.size() != cfg.len_x1 || cw.x2.size() != cfg.len_x2)
        throw std::logic_error("sccc_encode: stream length contract violated");
    return cw;
}

DecodeResult sccc_decode(const ScccConfig& cfg, const LlrFrame& channel, int n_iterations,
                         const DecodeOptions& opts) {
    const size_t k = static_cast<size_t>(cfg.dims.k);
    const size_t n = static_cast<size_t>(cfg.dims.n());
    if (channel.size() != cfg.total_len())
        throw std::invalid_argument("sccc_decode: channel frame length must equal L");
    if (n_iterations < 1) throw std::invalid_argument("sccc_decode: n_iterations must be >= 1");

    // demultiplex and depuncture into lambda(v) and lambda(lower parity)
    const LlrFrame l_x1(channel.begin() + static_cast<long>(cfg.len_x0),
                        channel.begin() + static_cast<long>(cfg.len_x0 + cfg.len_x1));
    const LlrFrame l_x2(channel.begin() + static_cast<long>(cfg.len_x0 + cfg.len_x1),
                        channel.end());
    LlrFrame lambda_v(channel.begin(), channel.begin() + static_cast<long>(k));
    {
        const LlrFrame pp = depuncture(cfg.p1, l_x1, k / 2);
        lambda_v.insert(lambda_v.end(), pp.begin(), pp.end());
    }
    const LlrFrame lambda_c2 = depuncture(cfg.p2, l_x2, n);

    LlrFrame ext_upper_v(n, 0.0);
    const LlrFrame zero_prior_in(k, 0.0);
    LlrFrame msg_v(n), prior_out_upper(2 * k);

    DecodeResult res;
    LlrFrame app_sys;
    BitVec prev_signs;
    for (int it = 0; it < n_iterations; ++it) {
        for (size_t i = 0; i < n; ++i) msg_v[i] = clamp_llr(lambda_v[i] + ext_upper_v[i]);
        const LlrFrame prior_in_lower = permute(cfg.interleaver, msg_v);
        SisoResult lower = siso_decode(cfg.lower_trellis, prior_in_lower, lambda_c2, 0, opts.arith);
        const LlrFrame ext_lower_v = inverse_permute(cfg.interleaver, lower.extrinsic_in);

        // upper output priors: systematic bits, then the P-kept (even) parity
        // bits; odd parity positions were never part of v and stay at 0
        for (size_t t = 0; t < k; ++t) {
            prior_out_upper[2 * t] = clamp_llr(lambda_v[t] + ext_lower_v[t]);
            if (t % 2 == 0)
                prior_out_upper[2 * t + 1] =
                    clamp_llr(lambda_v[k + t / 2] + ext_lower_v[k + t / 2]);
            else
                prior_out_upper[2 * t + 1] = 0.0;
        }
        SisoResult upper =
            siso_decode(cfg.upper_trellis, zero_prior_in, prior_out_upper, 0, opts.arith);
        for (size_t t = 0; t < k; ++t) ext_upper_v[t] = upper.extrinsic_out[2 * t];
        for (size_t j = 0; j < k / 2; ++j) ext_upper_v[k + j] = upper.extrinsic_out[4 * j + 1];

        app_sys = std::move(upper.app_in);
        res.iterations_run = it + 1;
        if (opts.record_app_per_iteration) res.app_sys.push_back(app_sys);
        if (opts.record_messages) {
            res.msg_to_lower.push_back(prior_in_lower);
            res.ext_from_lower.push_back(lower.extrinsic_in);
        }
        if (opts.early_stop) {
            BitVec signs(k);
            for (size_t t = 0; t < k; ++t) signs[t] = static_cast<uint8_t>(hard_bit(app_sys[t]));
            if (signs == prev_signs) break;
            prev_signs = std::move(signs);
        }
    }

    res.u_hat.resize(k);
    for (size_t t = 0; t < k; ++t) res.u_hat[t] = static_cast<uint8_t>(hard_bit(app_sys[t]));
    return res;
}

std::string frame_dump_json(const ScccConfig& cfg, const BitVec& u, const Codeword& cw,
                            uint64_t seed) {
    nlohmann::json j;
    j["u"] = u;
    j["x0"] = cw.x0;
    j["x1"] = cw.x1;
    j["x2"] = cw.x2;
    j["seed"] = seed;
    j["dims"] = {{"d0", cfg.dims.d0}, {"d1", cfg.dims.d1}, {"d2", cfg.dims.d2},
                 {"k", cfg.dims.k},   {"n", cfg.dims.n()}, {"l", cfg.dims.pattern_period_total()}};
    return j.dump(2);
}

}  // namespace sccc
