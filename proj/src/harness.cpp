#include "sccc/harness.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "sccc/channel.hpp"
#include "sccc/numerics.hpp"
#include "sccc/parallel.hpp"
#include "sccc/rng.hpp"

namespace sccc {

namespace {

constexpr int kFramesPerBatch = 64;  // fixed so parallel == serial aggregation
constexpr const char* kCodeVersion = "sccc-toolkit 1.0";

struct FrameOutcome {
    long long bit_errors = 0;
    bool frame_error = false;
    std::vector<long long> iteration_bit_errors;
};

FrameOutcome simulate_frame(const ScccConfig& cfg, const ChannelParams& params,
                            const RunOptions& ropt, uint64_t frame_seed) {
    Rng rng(frame_seed);
    const uint64_t noise_seed = rng.next_u64();
    BitVec u(static_cast<size_t>(cfg.dims.k));
    for (auto& b : u) b = static_cast<uint8_t>(rng.next_bit());

    const Codeword cw = sccc_encode(cfg, u);
    const auto y = transmit(cw.serialized(), params, noise_seed);
    DecodeOptions dopt;
    dopt.arith = ropt.arith;
    dopt.record_app_per_iteration = ropt.record_iteration_ber;
    const DecodeResult dec =
        params.sigma2 > 0.0
            ? sccc_decode(cfg, channel_llrs(y, params.sigma2), ropt.n_iterations, dopt)
            : [&] {
                  // noiseless limit: saturated LLRs straight from the symbols
                  LlrFrame llr(y.size());
                  for (size_t i = 0; i < y.size(); ++i) llr[i] = y[i] > 0 ? kLlrClamp : -kLlrClamp;
                  return sccc_decode(cfg, llr, ropt.n_iterations, dopt);
              }();

    FrameOutcome out;
    for (size_t i = 0; i < u.size(); ++i)
        if (dec.u_hat[i] != u[i]) ++out.bit_errors;
    out.frame_error = out.bit_errors > 0;
    if (ropt.record_iteration_ber) {
        out.iteration_bit_errors.assign(static_cast<size_t>(ropt.n_iterations), 0);
        for (size_t it = 0; it < dec.app_sys.size(); ++it)
            for (size_t i = 0; i < u.size(); ++i)
                if (hard_bit(dec.app_sys[it][i]) != u[i]) ++out.iteration_bit_errors[it];
    }
    return out;
}

}  // namespace

BerCurve run_ber(const ScccConfig& cfg, const std::vector<double>& snr_grid_db,
                 const StopRule& stop, const RunOptions& opt) {
    BerCurve curve;
    curve.dims = cfg.dims;
    curve.n_iterations = opt.n_iterations;
    curve.seed = opt.seed;
    curve.interleaver_desc = cfg.interleaver.describe();

    const double rate = static_cast<double>(cfg.dims.k) / static_cast<double>(cfg.total_len());
    for (size_t si = 0; si < snr_grid_db.size(); ++si) {
        const auto params = ChannelParams::from_ebn0(snr_grid_db[si], rate);
        const uint64_t point_seed = Rng::derive(opt.seed, si);
        BerPoint point;
        point.eb_n0_db = snr_grid_db[si];
        if (opt.record_iteration_ber)
            point.iteration_bit_errors.assign(static_cast<size_t>(opt.n_iterations), 0);

        long long frame_index = 0;
        while (point.bit_errors < stop.min_bit_errors && point.bits < stop.max_bits &&
               point.frames < stop.max_frames) {
            const int batch = static_cast<int>(
                std::min<long long>(kFramesPerBatch, stop.max_frames - point.frames));
            std::vector<FrameOutcome> outcomes(static_cast<size_t>(batch));
            parallel_for(batch, opt.threads, [&](int f) {
                const uint64_t frame_seed =
                    Rng::derive(point_seed, static_cast<uint64_t>(frame_index + f));
                outcomes[static_cast<size_t>(f)] = simulate_frame(cfg, params, opt, frame_seed);
            });
            for (const auto& o : outcomes) {
                point.bit_errors += o.bit_errors;
                point.frame_errors += o.frame_error ? 1 : 0;
                point.bits += cfg.dims.k;
                point.frames += 1;
                for (size_t it = 0; it < o.iteration_bit_errors.size(); ++it)
                    point.iteration_bit_errors[it] += o.iteration_bit_errors[it];
            }
            frame_index += batch;
        }
        curve.points.push_back(point);
    }
    return curve;
}

BerPoint uncoded_ber_point(double eb_n0_db, long long n_bits, uint64_t seed) {
    const auto params = ChannelParams::from_ebn0(eb_n0_db, 1.0);
    Rng rng(seed);
    const uint64_t noise_seed = rng.next_u64();
    BitVec bits(static_cast<size_t>(n_bits));
    for (auto& b : bits) b = static_cast<uint8_t>(rng.next_bit());
    const auto y = transmit(bits, params, noise_seed);
    BerPoint point;
    point.eb_n0_db = eb_n0_db;
    point.bits = n_bits;
    point.frames = 1;
    for (size_t i = 0; i < bits.size(); ++i)
        if ((y[i] < 0.0 ? 1 : 0) != bits[i]) ++point.bit_errors;
    point.frame_errors = point.bit_errors > 0 ? 1 : 0;
    return point;
}

CombinedPrediction combined_prediction(const CodeDimensions& dims, const PuncturePattern& p1,
                                       const PuncturePattern& p2, int k,
                                       const std::vector<double>& snr_grid_db, int n_iterations,
                                       const ExitEstimatorOptions& exit_opt,
                                       const WefLimits& limits) {
    const UpperWef upper = enumerate_upper(p1, k, limits);
    const LowerWef lower = enumerate_lower(p2, 3 * k / 2, limits);
    const double rate = dims.rate().to_double();

    CombinedPrediction pred;
    for (double db : snr_grid_db) {
        PredictionPoint point;
        point.eb_n0_db = db;
        const ExitCurve up = exit_curve_upper(dims, p1, db, exit_opt);
        const ExitCurve low = exit_curve_lower(dims, p2, db, exit_opt);
        point.pb_exit = run_trajectory(up, low, n_iterations).predicted_pb;
        point.pb_ub = union_bound(upper, lower, k, rate, db);
        pred.points.push_back(point);
    }

    // crossover: first grid point where the EXIT prediction dips below the
    // bound; EXIT applies before it, the bound after
    size_t crossover = pred.points.size();
    for (size_t i = 0; i < pred.points.size(); ++i) {
        if (pred.points[i].pb_exit <= pred.points[i].pb_ub) {
            crossover = i;
            break;
        }
    }
    pred.crossover_found = crossover < pred.points.size();
    for (size_t i = 0; i < pred.points.size(); ++i) {
        auto& pt = pred.points[i];
        pt.region = i < crossover ? "wf" : "ef";
        pt.pb_combined = i < crossover ? pt.pb_exit : std::min(1.0, pt.pb_ub);
    }
    return pred;
}

void write_ber_csv(const std::string& path, const BerCurve& curve) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_ber_csv: cannot open " + path);
    out << "eb_n0_db,ber,fer,bits,frames,bit_errors,frame_errors\n";
    out.precision(10);
    for (const auto& p : curve.points)
        out << p.eb_n0_db << ',' << p.ber() << ',' << p.fer() << ',' << p.bits << ',' << p.frames
            << ',' << p.bit_errors << ',' << p.frame_errors << "\n";
}

void write_iteration_ber_csv(const std::string& path, const BerCurve& curve) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_iteration_ber_csv: cannot open " + path);
    out << "eb_n0_db,iteration,ber\n";
    out.precision(10);
    for (const auto& p : curve.points)
        for (size_t it = 0; it < p.iteration_bit_errors.size(); ++it)
            out << p.eb_n0_db << ',' << (it + 1) << ','
                << static_cast<double>(p.iteration_bit_errors[it]) / static_cast<double>(p.bits)
                << "\n";
}

void write_prediction_csv(const std::string& path, const CombinedPrediction& pred) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_prediction_csv: cannot open " + path);
    out << "eb_n0_db,pb_exit,pb_ub,pb_combined,region\n";
    out.precision(10);
    for (const auto& p : pred.points)
        out << p.eb_n0_db << ',' << p.pb_exit << ',' << p.pb_ub << ',' << p.pb_combined << ','
            << p.region << "\n";
}

std::string run_manifest_json(const ScccConfig& cfg, const std::vector<double>& snr_grid_db,
                              const StopRule& stop, const RunOptions& opt) {
    nlohmann::json j;
    j["code_version"] = kCodeVersion;
    j["dims"] = {{"d0", cfg.dims.d0}, {"d1", cfg.dims.d1}, {"d2", cfg.dims.d2}, {"k", cfg.dims.k}};
    j["p1_zero_indices"] = cfg.p1.zero_indices();
    j["p2_zero_indices"] = cfg.p2.zero_indices();
    j["interleaver"] = {{"kind", cfg.interleaver.describe()},
                        {"seed", cfg.interleaver.seed},
                        {"n", cfg.interleaver.size()}};
    j["snr_grid_db"] = snr_grid_db;
    j["stop_rule"] = {{"min_bit_errors", stop.min_bit_errors},
                      {"max_bits", stop.max_bits},
                      {"max_frames", stop.max_frames}};
    j["n_iterations"] = opt.n_iterations;
    j["seed"] = opt.seed;
    j["arithmetic"] = opt.arith == SisoArithmetic::log_map ? "log_map" : "max_log_map";
    return j.dump(2);
}

}  // namespace sccc
