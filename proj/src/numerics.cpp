#include "sccc/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace sccc {

double q_func_inv(double p) {
    if (p <= 0.0 || p > 0.5) throw std::invalid_argument("q_func_inv: p must be in (0, 0.5]");
    double lo = 0.0, hi = 40.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (q_func(mid) > p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double log_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("log_binomial: k out of range");
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

GaussHermite gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
    GaussHermite gh;
    gh.nodes.resize(n);
    gh.weights.resize(n);
    constexpr double kEps = 3.0e-14;
    constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^{-1/4}
    const int m = (n + 1) / 2;
    double z = 0.0, pp = 0.0;
    for (int i = 0; i < m; ++i) {
        // initial root guesses, then Newton on the orthonormal recurrence
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * gh.nodes[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * gh.nodes[1];
        else
            z = 2.0 * z - gh.nodes[i - 2];
        for (int it = 0; it < 100; ++it) {
            double p1 = kPiQuarterInv, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= kEps) break;
        }
        gh.nodes[i] = z;
        gh.nodes[n - 1 - i] = -z;
        gh.weights[i] = 2.0 / (pp * pp);
        gh.weights[n - 1 - i] = gh.weights[i];
    }
    return gh;
}

namespace {

const GaussHermite& j_rule() {
    static const GaussHermite gh = gauss_hermite(128);
    return gh;
}

}  // namespace

double j_function(double sigma) {
    if (sigma < 0) throw std::invalid_argument("j_function: sigma must be >= 0");
    if (sigma == 0.0) return 0.0;
    const auto& gh = j_rule();
    const double mean = 0.5 * sigma * sigma;
    double acc = 0.0;
    for (size_t i = 0; i < gh.nodes.size(); ++i) {
        const double llr = mean + sigma * M_SQRT2 * gh.nodes[i];
        acc += gh.weights[i] * log2_one_plus_exp(-llr);
    }
    const double mi = 1.0 - acc / std::sqrt(M_PI);
    if (mi < 0.0) return 0.0;
    if (mi > 1.0) return 1.0;
    return mi;
}

double j_inverse(double mi) {
    if (mi <= 0.0) return 0.0;
    if (mi >= 1.0 - 1e-12) return 40.0;  // effectively perfect prior
    double lo = 0.0, hi = 40.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (j_function(mid) < mi)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-12 * (1.0 + lo)) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace sccc
