#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sccc/channel.hpp"
#include "sccc/convcode.hpp"
#include "sccc/interleaving.hpp"
#include "sccc/puncturing.hpp"
#include "sccc/rng.hpp"

namespace sccc {

// Consistent-Gaussian a-priori LLRs with mutual information ia against the
// given bits: sigma_a = J^{-1}(ia), L ~ N(+-sigma_a^2/2, sigma_a^2),
// saturated at +-50 (ia = 1 degenerates to clamped correct-sign LLRs).
LlrFrame gen_prior(double ia, const BitVec& bits, Rng& rng);

// I = 1 - mean(log2(1 + e^{-b L})) over antipodal b, clipped to [0,1].
double measure_mi(const LlrFrame& llrs, const BitVec& bits);

struct ExitPoint {
    double ia = 0;
    double ie = 0;
    double sigma_app = 0;  // consistent-Gaussian spread of the info-bit APP
                           // (upper/outer components only)
};

struct ExitCurve {
    std::vector<ExitPoint> points;
    std::string component;  // upper | lower | outer | inner
    std::string variable;   // v | z
    double eb_n0_db = 0.0;
    CodeDimensions dims;
    // MI carried by the channel LLRs of the shared variable alone; this is
    // where the decoder trajectory starts (first lower pass sees channel
    // observations of v and nothing else). Upper curves only.
    double i_channel = 0.0;

    double ie_at(double ia) const;         // monotone piecewise-cubic interpolation
    double sigma_app_at(double ia) const;
};

struct ExitEstimatorOptions {
    int grid_points = 21;
    long long n_samples = 200000;  // measured bits per grid point
    int frame_k = 10000;           // info bits per estimation frame (multiple of 200)
    uint64_t seed = 1;
    int threads = 0;               // 0 = hardware concurrency
    // threshold bisection resolution; flat optima (waterfall grids) may need
    // finer steps than the 0.05 dB default to order neighbouring d2 choices
    double bisect_tol_db = 0.05;
};

// Transfer curves of the two-code decomposition at the given channel SNR.
// The upper SISO sees channel LLRs of x0/x1 plus the synthetic prior on v
// modelling the lower extrinsic; its reported ie is the mutual information
// of the full outgoing message (channel + code extrinsic per v position).
// The lower SISO sees channel LLRs of x2 only; its synthetic prior on z
// models the full incoming message, and its ie is the MI of its extrinsic.
ExitCurve exit_curve_upper(const CodeDimensions& dims, const PuncturePattern& p1,
                           double eb_n0_db, const ExitEstimatorOptions& opt);
ExitCurve exit_curve_lower(const CodeDimensions& dims, const PuncturePattern& p2,
                           double eb_n0_db, const ExitEstimatorOptions& opt);

// Classical outer/inner chart of the one-interleaver view: the inner encoder
// with its puncturers is treated as a unit (channel LLRs of its transmitted
// systematic and parity bits), the outer decoder sees priors only. Only the
// inner curve depends on SNR.
struct ClassicalCurves {
    ExitCurve outer;
    ExitCurve inner;
};
ClassicalCurves exit_curve_classical(const CodeDimensions& dims, const PuncturePattern& p1,
                                     const PuncturePattern& p2, double eb_n0_db,
                                     const ExitEstimatorOptions& opt);

struct TrajectoryStep {
    int iteration = 0;
    double i_msg_to_lower = 0;  // MI of the message entering the lower SISO
    double i_ext_lower = 0;     // MI of the lower extrinsic fed back
};

struct Trajectory {
    std::vector<TrajectoryStep> steps;
    double final_i_app = 0.0;
    double final_sigma_app = 0.0;
    double predicted_pb = 0.5;
    bool reached(double target_pb) const { return predicted_pb <= target_pb; }
};

// Alternating staircase between the interpolated curves, lower pass first,
// starting from the channel information on v. predicted_pb maps the final
// systematic-APP information through the Gaussian-consistent model.
Trajectory run_trajectory(const ExitCurve& upper, const ExitCurve& lower, int n_iterations);
Trajectory run_trajectory_classical(const ExitCurve& outer, const ExitCurve& inner,
                                    int n_iterations);

// Pb = Q(J^{-1}(I_app)/2) under the Gaussian-APP model.
double predict_ber(double i_app);

struct ThresholdResult {
    CodeDimensions dims;
    double target_pb = 1e-5;
    int n_iterations = 10;
    double eb_n0_db_min = 0.0;
    bool converged = false;
};

// Bisection over Eb/N0 (default bracket [-2, 12] dB, resolved to 0.05 dB) for
// the lowest SNR whose predicted trajectory reaches target_pb within
// n_iterations. Curves are re-estimated at every probe with common random
// numbers across probes.
ThresholdResult threshold_search(const CodeDimensions& dims, const PuncturePattern& p1,
                                 const PuncturePattern& p2, double target_pb, int n_iterations,
                                 const ExitEstimatorOptions& opt, double lo_db = -2.0,
                                 double hi_db = 12.0);
ThresholdResult threshold_search_classical(const CodeDimensions& dims, const PuncturePattern& p1,
                                           const PuncturePattern& p2, double target_pb,
                                           int n_iterations, const ExitEstimatorOptions& opt,
                                           double lo_db = -2.0, double hi_db = 12.0);

struct WfGridPoint {
    int d2 = 0;
    ThresholdResult threshold;
};

// Threshold for every feasible d2 at period length L (patterns taken from
// the rate-compatible tables), stepping d2 by d2_step.
std::vector<WfGridPoint> wf_grid(int L, const RateCompatibleTable& upper_table,
                                 const RateCompatibleTable& lower_table, double target_pb,
                                 int n_iterations, int d2_step, const ExitEstimatorOptions& opt);

// argmin of the grid; ties go to the larger d2.
int choose_d2_wf(const std::vector<WfGridPoint>& grid);

void write_exit_csv(const std::string& path, const std::vector<ExitCurve>& curves);
void write_threshold_csv(const std::string& path, const std::vector<WfGridPoint>& grid,
                         const Rational& rate);

}  // namespace sccc
