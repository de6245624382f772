#pragma once

#include <cmath>
#include <vector>

namespace sccc {

// LLR magnitudes are saturated here before any exponentiation-sensitive step.
constexpr double kLlrClamp = 50.0;

inline double clamp_llr(double x) {
    if (x > kLlrClamp) return kLlrClamp;
    if (x < -kLlrClamp) return -kLlrClamp;
    return x;
}

// Exact Jacobian logarithm: max*(a,b) = ln(e^a + e^b).
// The correction term log1p(exp(-d)) is evaluated exactly, which keeps the
// log-MAP SISO within 1e-6 of brute-force MAP marginals.
inline double max_star(double a, double b) {
    const double m = a > b ? a : b;
    const double d = a > b ? a - b : b - a;
    if (d > 40.0) return m;  // correction below 4e-18
    return m + std::log1p(std::exp(-d));
}

inline double max_only(double a, double b) { return a > b ? a : b; }

// Gaussian tail probability Q(x) = 0.5 erfc(x / sqrt(2)).
inline double q_func(double x) { return 0.5 * std::erfc(x * M_SQRT1_2); }

// Inverse of q_func on (0, 0.5], by bisection.
double q_func_inv(double p);

// ln C(n, k) via lgamma; exact enough for bound assembly at n up to 10^5.
double log_binomial(int n, int k);

// Nodes/weights for ∫ e^{-t^2} f(t) dt ≈ Σ w_i f(t_i).
struct GaussHermite {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussHermite gauss_hermite(int n);

// Mutual information of a consistent Gaussian LLR, L ~ N(±σ²/2, σ²):
//   J(σ) = 1 - E[log2(1 + e^{-L})]
// evaluated with a cached 128-node Gauss-Hermite rule. Strictly increasing
// from J(0) = 0 toward 1.
double j_function(double sigma);

// Inverse of J by bisection; mi is clipped to [0, 1). j_inverse(j_function(s))
// recovers s, and j_function(j_inverse(i)) recovers i to 1e-6 over
// i in [0.001, 0.999].
double j_inverse(double mi);

// log2(1 + e^x) without overflow.
inline double log2_one_plus_exp(double x) {
    constexpr double kInvLn2 = 1.4426950408889634;
    if (x > 0) return (x + std::log1p(std::exp(-x))) * kInvLn2;
    return std::log1p(std::exp(x)) * kInvLn2;
}

}  // namespace sccc
