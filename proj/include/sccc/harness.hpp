#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sccc/exit_chart.hpp"
#include "sccc/sccc_code.hpp"
#include "sccc/wef.hpp"

namespace sccc {

// Per-SNR-point stop rule: simulate whole batches of frames until enough bit
// errors have been seen or the bit budget is exhausted.
struct StopRule {
    long long min_bit_errors = 100;
    long long max_bits = 10'000'000;
    long long max_frames = 1'000'000'000;
};

struct BerPoint {
    double eb_n0_db = 0.0;
    long long bits = 0;
    long long frames = 0;
    long long bit_errors = 0;
    long long frame_errors = 0;
    std::vector<long long> iteration_bit_errors;  // filled when requested

    double ber() const { return bits > 0 ? static_cast<double>(bit_errors) / bits : 0.0; }
    double fer() const { return frames > 0 ? static_cast<double>(frame_errors) / frames : 0.0; }
};

struct BerCurve {
    std::vector<BerPoint> points;
    CodeDimensions dims;
    int n_iterations = 10;
    uint64_t seed = 0;
    std::string interleaver_desc;
};

struct RunOptions {
    int n_iterations = 10;
    uint64_t seed = 1;
    int threads = 0;
    SisoArithmetic arith = SisoArithmetic::log_map;
    bool record_iteration_ber = false;
};

// Monte Carlo BER/FER over the SNR grid. Frames are scheduled in fixed
// batches with per-frame seeds derived from (seed, snr index, frame index),
// so parallel and serial runs aggregate identical counts.
BerCurve run_ber(const ScccConfig& cfg, const std::vector<double>& snr_grid_db,
                 const StopRule& stop, const RunOptions& opt);

// Uncoded BPSK reference point (rate 1, sign decisions).
BerPoint uncoded_ber_point(double eb_n0_db, long long n_bits, uint64_t seed);

// Waterfall prediction from the EXIT trajectory combined with the union bound
// in the floor region: the EXIT value applies below the crossover SNR, the
// bound above it.
struct PredictionPoint {
    double eb_n0_db = 0.0;
    double pb_exit = 0.5;
    double pb_ub = 1.0;
    double pb_combined = 0.5;
    std::string region;  // "wf" or "ef"
};

struct CombinedPrediction {
    std::vector<PredictionPoint> points;
    bool crossover_found = false;
};

CombinedPrediction combined_prediction(const CodeDimensions& dims, const PuncturePattern& p1,
                                       const PuncturePattern& p2, int k,
                                       const std::vector<double>& snr_grid_db, int n_iterations,
                                       const ExitEstimatorOptions& exit_opt,
                                       const WefLimits& limits);

void write_ber_csv(const std::string& path, const BerCurve& curve);
// per-iteration view (eb_n0_db,iteration,ber); needs record_iteration_ber
void write_iteration_ber_csv(const std::string& path, const BerCurve& curve);
void write_prediction_csv(const std::string& path, const CombinedPrediction& pred);

// JSON manifest carrying everything needed to reproduce a run bit-exactly.
std::string run_manifest_json(const ScccConfig& cfg, const std::vector<double>& snr_grid_db,
                              const StopRule& stop, const RunOptions& opt);

}  // namespace sccc
