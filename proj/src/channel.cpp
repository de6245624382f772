#include "sccc/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "sccc/numerics.hpp"
#include "sccc/rng.hpp"

namespace sccc {

ChannelParams ChannelParams::from_ebn0(double eb_n0_db, double rate) {
    if (rate <= 0.0 || rate > 1.0) throw std::invalid_argument("channel: rate must be in (0, 1]");
    ChannelParams p;
    p.eb_n0_db = eb_n0_db;
    p.rate = rate;
    p.sigma2 = 1.0 / (2.0 * rate * std::pow(10.0, eb_n0_db / 10.0));
    return p;
}

std::vector<double> transmit(const BitVec& bits, const ChannelParams& params, uint64_t seed) {
    if (params.sigma2 < 0.0) throw std::invalid_argument("transmit: sigma2 must be >= 0");
    std::vector<double> y(bits.size());
    Rng rng(seed);
    const double sigma = std::sqrt(params.sigma2);
    for (size_t i = 0; i < bits.size(); ++i) {
        const double x = bits[i] ? -1.0 : 1.0;
        y[i] = sigma > 0.0 ? x + sigma * rng.next_gaussian() : x;
    }
    return y;
}

LlrFrame channel_llrs(const std::vector<double>& y, double sigma2) {
    if (sigma2 <= 0.0) throw std::invalid_argument("channel_llrs: sigma2 must be > 0");
    LlrFrame llr(y.size());
    const double scale = 2.0 / sigma2;
    for (size_t i = 0; i < y.size(); ++i) llr[i] = clamp_llr(scale * y[i]);
    return llr;
}

double bpsk_capacity(double sigma2) {
    if (sigma2 <= 0.0) throw std::invalid_argument("bpsk_capacity: sigma2 must be > 0");
    // the channel LLR 2y/sigma2 is a consistent Gaussian with
    // sigma_llr = 2/sigma_n, so the mutual information is J of that
    return j_function(2.0 / std::sqrt(sigma2));
}

double bpsk_ebn0_limit_db(double rate) {
    if (rate <= 0.0 || rate >= 1.0)
        throw std::invalid_argument("bpsk_ebn0_limit_db: rate must be in (0, 1)");
    auto capacity_at = [rate](double db) {
        return bpsk_capacity(ChannelParams::from_ebn0(db, rate).sigma2);
    };
    double lo = -3.0, hi = 25.0;
    if (capacity_at(lo) > rate || capacity_at(hi) < rate)
        throw std::runtime_error("bpsk_ebn0_limit_db: no root in search bracket");
    while (hi - lo > 0.005) {
        const double mid = 0.5 * (lo + hi);
        if (capacity_at(mid) < rate)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double bpsk_capacity_gap_db(double rate, double eb_n0_db) {
    return eb_n0_db - bpsk_ebn0_limit_db(rate);
}

}  // namespace sccc
