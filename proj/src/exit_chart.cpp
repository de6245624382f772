#include "sccc/exit_chart.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "sccc/numerics.hpp"
#include "sccc/parallel.hpp"

namespace sccc {

LlrFrame gen_prior(double ia, const BitVec& bits, Rng& rng) {
    if (ia < 0.0 || ia > 1.0) throw std::invalid_argument("gen_prior: ia must be in [0,1]");
    if (ia == 0.0) return LlrFrame(bits.size(), 0.0);
    const double sigma = j_inverse(ia);
    const double mean = 0.5 * sigma * sigma;
    LlrFrame llr(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        const double a = bits[i] ? -1.0 : 1.0;
        llr[i] = clamp_llr(a * mean + sigma * rng.next_gaussian());
    }
    return llr;
}

namespace {

// streaming form of the measure_mi estimator
struct MiAccum {
    double sum = 0.0;
    long long n = 0;
    void add(double llr, int bit) {
        sum += log2_one_plus_exp(bit ? llr : -llr);
        ++n;
    }
    double value() const {
        if (n == 0) throw std::invalid_argument("measure_mi: empty input");
        return std::clamp(1.0 - sum / static_cast<double>(n), 0.0, 1.0);
    }
};

// moment estimator of the consistent-Gaussian spread: E[b L] = sigma^2 / 2.
// Robust where the MI estimator saturates against 1.
struct SigmaAccum {
    double sum = 0.0;
    long long n = 0;
    void add(double llr, int bit) {
        sum += bit ? -llr : llr;
        ++n;
    }
    double sigma() const {
        if (n == 0) return 0.0;
        const double m = sum / static_cast<double>(n);
        return m > 0.0 ? std::sqrt(2.0 * m) : 0.0;
    }
};

}  // namespace

double measure_mi(const LlrFrame& llrs, const BitVec& bits) {
    if (llrs.size() != bits.size()) throw std::invalid_argument("measure_mi: length mismatch");
    MiAccum acc;
    for (size_t i = 0; i < llrs.size(); ++i) acc.add(llrs[i], bits[i]);
    return acc.value();
}

namespace {

// Fritsch-Carlson monotone piecewise-cubic interpolant
struct Pchip {
    std::vector<double> x, y, d;

    static Pchip fit(std::vector<double> xs, std::vector<double> ys) {
        Pchip p;
        p.x = std::move(xs);
        p.y = std::move(ys);
        const size_t n = p.x.size();
        p.d.assign(n, 0.0);
        if (n == 1) return p;
        std::vector<double> slope(n - 1);
        for (size_t i = 0; i + 1 < n; ++i)
            slope[i] = (p.y[i + 1] - p.y[i]) / (p.x[i + 1] - p.x[i]);
        p.d[0] = slope[0];
        p.d[n - 1] = slope[n - 2];
        for (size_t i = 1; i + 1 < n; ++i) {
            if (slope[i - 1] * slope[i] <= 0.0) {
                p.d[i] = 0.0;
            } else {
                const double h0 = p.x[i] - p.x[i - 1];
                const double h1 = p.x[i + 1] - p.x[i];
                const double w0 = 2.0 * h1 + h0;
                const double w1 = h1 + 2.0 * h0;
                p.d[i] = (w0 + w1) / (w0 / slope[i - 1] + w1 / slope[i]);
            }
        }
        return p;
    }

    double eval(double q) const {
        if (x.size() == 1) return y[0];
        if (q <= x.front()) return y.front();
        if (q >= x.back()) return y.back();
        size_t i = static_cast<size_t>(std::upper_bound(x.begin(), x.end(), q) - x.begin()) - 1;
        const double h = x[i + 1] - x[i];
        const double t = (q - x[i]) / h;
        const double t2 = t * t, t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
        return h00 * y[i] + h10 * h * d[i] + h01 * y[i + 1] + h11 * h * d[i + 1];
    }
};

Pchip curve_interp(const ExitCurve& c, bool sigma_channel) {
    std::vector<double> xs, ys;
    xs.reserve(c.points.size());
    ys.reserve(c.points.size());
    for (const auto& p : c.points) {
        xs.push_back(p.ia);
        ys.push_back(sigma_channel ? p.sigma_app : p.ie);
    }
    return Pchip::fit(std::move(xs), std::move(ys));
}

}  // namespace

double ExitCurve::ie_at(double ia) const {
    if (points.empty()) throw std::logic_error("ExitCurve: empty curve");
    return curve_interp(*this, false).eval(ia);
}

double ExitCurve::sigma_app_at(double ia) const {
    if (points.empty()) throw std::logic_error("ExitCurve: empty curve");
    return curve_interp(*this, true).eval(ia);
}

namespace {

std::vector<double> ia_grid(int n_points) {
    if (n_points < 2) throw std::invalid_argument("exit: grid needs at least 2 points");
    std::vector<double> g(static_cast<size_t>(n_points));
    for (int i = 0; i < n_points; ++i) g[static_cast<size_t>(i)] = static_cast<double>(i) / (n_points - 1);
    return g;
}

int frames_for(long long n_samples, long long per_frame) {
    return static_cast<int>(std::max<long long>(1, (n_samples + per_frame - 1) / per_frame));
}

void check_frame_k(int frame_k) {
    if (frame_k < 200 || frame_k % 200 != 0)
        throw std::invalid_argument("exit: frame_k must be a positive multiple of 200");
}

BitVec random_bits(size_t n, Rng& rng) {
    BitVec b(n);
    for (auto& v : b) v = static_cast<uint8_t>(rng.next_bit());
    return b;
}

struct PointMeasurement {
    double ie = 0;
    double sigma_app = 0;
    double i_channel = 0;
};

}  // namespace

ExitCurve exit_curve_upper(const CodeDimensions& dims, const PuncturePattern& p1,
                           double eb_n0_db, const ExitEstimatorOptions& opt) {
    check_frame_k(opt.frame_k);
    const size_t k = static_cast<size_t>(opt.frame_k);
    const size_t n = 3 * k / 2;
    const double rate = dims.rate().to_double();
    const auto params = ChannelParams::from_ebn0(eb_n0_db, rate);
    const Trellis upper = build_trellis(cc_1_5_7());
    const Trellis parity = build_trellis(cc_5_7());
    const auto grid = ia_grid(opt.grid_points);
    const int n_frames = frames_for(opt.n_samples, static_cast<long long>(n));

    std::vector<PointMeasurement> meas(grid.size());
    parallel_for(static_cast<int>(grid.size()), opt.threads, [&](int gi) {
        const double ia = grid[static_cast<size_t>(gi)];
        const uint64_t point_seed = Rng::derive(opt.seed, static_cast<uint64_t>(gi));
        MiAccum mi_msg, mi_ch;
        SigmaAccum sig_app;
        LlrFrame prior_out(2 * k), zero_in(k, 0.0);
        for (int f = 0; f < n_frames; ++f) {
            Rng rng(Rng::derive(point_seed, static_cast<uint64_t>(f)));
            const uint64_t noise_seed = rng.next_u64();
            const BitVec u = random_bits(k, rng);
            const BitVec par1 = encode(parity, u).coded;
            BitVec v(u);
            v.resize(n);
            for (size_t j = 0; j < k / 2; ++j) v[k + j] = par1[2 * j];

            // transmitted streams x0 = u, x1 = P1-kept parity
            BitVec tx(u);
            const BitVec pp(v.begin() + static_cast<long>(k), v.end());
            const BitVec x1 = apply_pattern(p1, pp);
            tx.insert(tx.end(), x1.begin(), x1.end());
            const auto y = transmit(tx, params, noise_seed);
            const LlrFrame llr = channel_llrs(y, params.sigma2);

            LlrFrame lambda_v(llr.begin(), llr.begin() + static_cast<long>(k));
            const LlrFrame x1_llr(llr.begin() + static_cast<long>(k), llr.end());
            const LlrFrame pp_llr = depuncture(p1, x1_llr, k / 2);
            lambda_v.insert(lambda_v.end(), pp_llr.begin(), pp_llr.end());

            const LlrFrame a = gen_prior(ia, v, rng);
            for (size_t t = 0; t < k; ++t) {
                prior_out[2 * t] = clamp_llr(lambda_v[t] + a[t]);
                prior_out[2 * t + 1] =
                    (t % 2 == 0) ? clamp_llr(lambda_v[k + t / 2] + a[k + t / 2]) : 0.0;
            }
            const SisoResult r = siso_decode(upper, zero_in, prior_out);

            // outgoing message per v position: app minus the modelled lower
            // extrinsic, i.e. channel + code extrinsic
            for (size_t t = 0; t < n; ++t) {
                const size_t pos = t < k ? 2 * t : 4 * (t - k) + 1;
                const double msg = prior_out[pos] - a[t] + r.extrinsic_out[pos];
                mi_msg.add(msg, v[t]);
                mi_ch.add(lambda_v[t], v[t]);
            }
            for (size_t t = 0; t < k; ++t)
                sig_app.add(prior_out[2 * t] + r.extrinsic_out[2 * t], u[t]);
        }
        meas[static_cast<size_t>(gi)] =
            PointMeasurement{mi_msg.value(), sig_app.sigma(), mi_ch.value()};
    });

    ExitCurve curve;
    curve.component = "upper";
    curve.variable = "v";
    curve.eb_n0_db = eb_n0_db;
    curve.dims = dims;
    curve.i_channel = meas[0].i_channel;
    for (size_t i = 0; i < grid.size(); ++i)
        curve.points.push_back({grid[i], meas[i].ie, meas[i].sigma_app});
    return curve;
}

ExitCurve exit_curve_lower(const CodeDimensions& dims, const PuncturePattern& p2,
                           double eb_n0_db, const ExitEstimatorOptions& opt) {
    check_frame_k(opt.frame_k);
    const size_t n = 3 * static_cast<size_t>(opt.frame_k) / 2;
    const double rate = dims.rate().to_double();
    const auto params = ChannelParams::from_ebn0(eb_n0_db, rate);
    const Trellis parity = build_trellis(cc_5_7());
    const auto grid = ia_grid(opt.grid_points);
    const int n_frames = frames_for(opt.n_samples, static_cast<long long>(n));
    const bool has_channel = p2.ones() > 0;

    std::vector<PointMeasurement> meas(grid.size());
    parallel_for(static_cast<int>(grid.size()), opt.threads, [&](int gi) {
        const double ia = grid[static_cast<size_t>(gi)];
        const uint64_t point_seed = Rng::derive(opt.seed ^ 0x10c5ea11u, static_cast<uint64_t>(gi));
        MiAccum mi_ext;
        for (int f = 0; f < n_frames; ++f) {
            Rng rng(Rng::derive(point_seed, static_cast<uint64_t>(f)));
            const uint64_t noise_seed = rng.next_u64();
            const BitVec z = random_bits(n, rng);
            const BitVec par2 = encode(parity, z).coded;
            LlrFrame lambda_c2(n, 0.0);
            if (has_channel) {
                const BitVec x2 = apply_pattern(p2, par2);
                const auto y = transmit(x2, params, noise_seed);
                lambda_c2 = depuncture(p2, channel_llrs(y, params.sigma2), n);
            }
            const LlrFrame a = gen_prior(ia, z, rng);
            const SisoResult r = siso_decode(parity, a, lambda_c2);
            for (size_t t = 0; t < n; ++t) mi_ext.add(r.extrinsic_in[t], z[t]);
        }
        meas[static_cast<size_t>(gi)].ie = mi_ext.value();
    });

    ExitCurve curve;
    curve.component = "lower";
    curve.variable = "z";
    curve.eb_n0_db = eb_n0_db;
    curve.dims = dims;
    for (size_t i = 0; i < grid.size(); ++i) curve.points.push_back({grid[i], meas[i].ie, 0.0});
    return curve;
}

ClassicalCurves exit_curve_classical(const CodeDimensions& dims, const PuncturePattern& p1,
                                     const PuncturePattern& p2, double eb_n0_db,
                                     const ExitEstimatorOptions& opt) {
    check_frame_k(opt.frame_k);
    const size_t k = static_cast<size_t>(opt.frame_k);
    const size_t n = 3 * k / 2;
    const double rate = dims.rate().to_double();
    const auto params = ChannelParams::from_ebn0(eb_n0_db, rate);
    const Trellis cc = build_trellis(cc_1_5_7());
    const auto grid = ia_grid(opt.grid_points);

    // outer code C0 = CC(1,5/7) + Pa, no channel input; coded positions after
    // Pa are every systematic bit and every even-stage parity bit
    const int outer_frames = frames_for(opt.n_samples, static_cast<long long>(n));
    std::vector<PointMeasurement> outer_meas(grid.size());
    parallel_for(static_cast<int>(grid.size()), opt.threads, [&](int gi) {
        const double ia = grid[static_cast<size_t>(gi)];
        const uint64_t point_seed = Rng::derive(opt.seed ^ 0x007e4u, static_cast<uint64_t>(gi));
        MiAccum mi_ext;
        SigmaAccum sig_app;
        LlrFrame prior_out(2 * k), zero_in(k, 0.0);
        for (int f = 0; f < outer_frames; ++f) {
            Rng rng(Rng::derive(point_seed, static_cast<uint64_t>(f)));
            const BitVec u = random_bits(k, rng);
            const BitVec coded = encode(cc, u).coded;
            BitVec vbits;
            vbits.reserve(n);
            std::vector<size_t> vpos;
            vpos.reserve(n);
            for (size_t t = 0; t < k; ++t) {
                vpos.push_back(2 * t);
                vbits.push_back(coded[2 * t]);
                if (t % 2 == 0) {
                    vpos.push_back(2 * t + 1);
                    vbits.push_back(coded[2 * t + 1]);
                }
            }
            const LlrFrame a = gen_prior(ia, vbits, rng);
            std::fill(prior_out.begin(), prior_out.end(), 0.0);
            for (size_t i = 0; i < vpos.size(); ++i) prior_out[vpos[i]] = a[i];
            const SisoResult r = siso_decode(cc, zero_in, prior_out);
            for (size_t i = 0; i < vpos.size(); ++i)
                mi_ext.add(r.extrinsic_out[vpos[i]], vbits[i]);
            for (size_t t = 0; t < k; ++t) sig_app.add(r.app_in[t], u[t]);
        }
        outer_meas[static_cast<size_t>(gi)] = {mi_ext.value(), sig_app.sigma(), 0.0};
    });

    // inner code C1 = CC(1,5/7) over z with Pb^s / Pb^p: the kept systematic
    // set is the interleaver image of the v keep-set (all info positions plus
    // the P1-kept parity positions)
    const int inner_frames = frames_for(opt.n_samples, static_cast<long long>(n));
    std::vector<PointMeasurement> inner_meas(grid.size());
    parallel_for(static_cast<int>(grid.size()), opt.threads, [&](int gi) {
        const double ia = grid[static_cast<size_t>(gi)];
        const uint64_t point_seed = Rng::derive(opt.seed ^ 0x1e4e12u, static_cast<uint64_t>(gi));
        MiAccum mi_ext;
        LlrFrame prior_out(2 * n);
        for (int f = 0; f < inner_frames; ++f) {
            Rng rng(Rng::derive(point_seed, static_cast<uint64_t>(f)));
            const uint64_t noise_seed = rng.next_u64();
            const uint64_t ilv_seed = rng.next_u64();

            BitVec keep_v(n, 0);
            for (size_t t = 0; t < k; ++t) keep_v[t] = 1;
            for (size_t j = 0; j < k / 2; ++j) keep_v[k + j] = p1.kept(j) ? 1 : 0;
            const Interleaver ilv = make_random_interleaver(static_cast<int>(n), ilv_seed);
            const BitVec keep_z = permute(ilv, keep_v);

            const BitVec z = random_bits(n, rng);
            const BitVec coded = encode(cc, z).coded;
            BitVec tx;
            tx.reserve(n);
            for (size_t t = 0; t < n; ++t)
                if (keep_z[t]) tx.push_back(coded[2 * t]);
            for (size_t t = 0; t < n; ++t)
                if (p2.kept(t)) tx.push_back(coded[2 * t + 1]);
            const auto y = transmit(tx, params, noise_seed);
            const LlrFrame llr = channel_llrs(y, params.sigma2);

            std::fill(prior_out.begin(), prior_out.end(), 0.0);
            size_t pos = 0;
            for (size_t t = 0; t < n; ++t)
                if (keep_z[t]) prior_out[2 * t] = llr[pos++];
            for (size_t t = 0; t < n; ++t)
                if (p2.kept(t)) prior_out[2 * t + 1] = llr[pos++];

            const LlrFrame a = gen_prior(ia, z, rng);
            const SisoResult r = siso_decode(cc, a, prior_out);
            for (size_t t = 0; t < n; ++t) mi_ext.add(r.extrinsic_in[t], z[t]);
        }
        inner_meas[static_cast<size_t>(gi)].ie = mi_ext.value();
    });

    ClassicalCurves curves;
    curves.outer.component = "outer";
    curves.outer.variable = "v";
    curves.outer.eb_n0_db = eb_n0_db;
    curves.outer.dims = dims;
    curves.inner.component = "inner";
    curves.inner.variable = "z";
    curves.inner.eb_n0_db = eb_n0_db;
    curves.inner.dims = dims;
    for (size_t i = 0; i < grid.size(); ++i) {
        curves.outer.points.push_back({grid[i], outer_meas[i].ie, outer_meas[i].sigma_app});
        curves.inner.points.push_back({grid[i], inner_meas[i].ie, 0.0});
    }
    return curves;
}

Trajectory run_trajectory(const ExitCurve& upper, const ExitCurve& lower, int n_iterations) {
    if (n_iterations < 1) throw std::invalid_argument("trajectory: n_iterations must be >= 1");
    const Pchip t_upper = curve_interp(upper, false);
    const Pchip t_lower = curve_interp(lower, false);
    const Pchip s_upper = curve_interp(upper, true);

    Trajectory traj;
    double msg = upper.i_channel;
    double ext = 0.0;
    for (int it = 1; it <= n_iterations; ++it) {
        ext = t_lower.eval(msg);
        msg = t_upper.eval(ext);
        traj.steps.push_back({it, msg, ext});
    }
    traj.final_sigma_app = s_upper.eval(ext);
    traj.final_i_app = j_function(traj.final_sigma_app);
    traj.predicted_pb = q_func(0.5 * traj.final_sigma_app);
    return traj;
}

Trajectory run_trajectory_classical(const ExitCurve& outer, const ExitCurve& inner,
                                    int n_iterations) {
    if (n_iterations < 1) throw std::invalid_argument("trajectory: n_iterations must be >= 1");
    const Pchip t_outer = curve_interp(outer, false);
    const Pchip t_inner = curve_interp(inner, false);
    const Pchip s_outer = curve_interp(outer, true);

    Trajectory traj;
    double to_inner = 0.0;
    double to_outer = 0.0;
    for (int it = 1; it <= n_iterations; ++it) {
        to_outer = t_inner.eval(to_inner);
        to_inner = t_outer.eval(to_outer);
        traj.steps.push_back({it, to_inner, to_outer});
    }
    traj.final_sigma_app = s_outer.eval(to_outer);
    traj.final_i_app = j_function(traj.final_sigma_app);
    traj.predicted_pb = q_func(0.5 * traj.final_sigma_app);
    return traj;
}

double predict_ber(double i_app) {
    if (i_app < 0.0 || i_app > 1.0) throw std::invalid_argument("predict_ber: i_app in [0,1]");
    return q_func(0.5 * j_inverse(i_app));
}

namespace {

template <typename ConvergedFn>
ThresholdResult bisect_threshold(const CodeDimensions& dims, double target_pb, int n_iterations,
                                 double lo, double hi, double tol, ConvergedFn converged) {
    ThresholdResult res;
    res.dims = dims;
    res.target_pb = target_pb;
    res.n_iterations = n_iterations;
    if (target_pb <= 0.0 || target_pb >= 0.5)
        throw std::invalid_argument("threshold_search: target_pb must be in (0, 0.5)");
    if (tol <= 0.0) throw std::invalid_argument("threshold_search: tolerance must be positive");
    if (!converged(hi)) {
        res.converged = false;
        res.eb_n0_db_min = std::numeric_limits<double>::quiet_NaN();
        return res;
    }
    if (converged(lo)) {
        res.converged = true;
        res.eb_n0_db_min = lo;
        return res;
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (converged(mid))
            hi = mid;
        else
            lo = mid;
    }
    res.converged = true;
    res.eb_n0_db_min = hi;
    return res;
}

}  // namespace

ThresholdResult threshold_search(const CodeDimensions& dims, const PuncturePattern& p1,
                                 const PuncturePattern& p2, double target_pb, int n_iterations,
                                 const ExitEstimatorOptions& opt, double lo_db, double hi_db) {
    auto converged = [&](double db) {
        const ExitCurve up = exit_curve_upper(dims, p1, db, opt);
        const ExitCurve low = exit_curve_lower(dims, p2, db, opt);
        return run_trajectory(up, low, n_iterations).reached(target_pb);
    };
    return bisect_threshold(dims, target_pb, n_iterations, lo_db, hi_db, opt.bisect_tol_db,
                            converged);
}

ThresholdResult threshold_search_classical(const CodeDimensions& dims, const PuncturePattern& p1,
                                           const PuncturePattern& p2, double target_pb,
                                           int n_iterations, const ExitEstimatorOptions& opt,
                                           double lo_db, double hi_db) {
    auto converged = [&](double db) {
        const ClassicalCurves c = exit_curve_classical(dims, p1, p2, db, opt);
        return run_trajectory_classical(c.outer, c.inner, n_iterations).reached(target_pb);
    };
    return bisect_threshold(dims, target_pb, n_iterations, lo_db, hi_db, opt.bisect_tol_db,
                            converged);
}

std::vector<WfGridPoint> wf_grid(int L, const RateCompatibleTable& upper_table,
                                 const RateCompatibleTable& lower_table, double target_pb,
                                 int n_iterations, int d2_step, const ExitEstimatorOptions& opt) {
    if (d2_step < 1) throw std::invalid_argument("wf_grid: d2_step must be >= 1");
    const int lo = d2_feasible_lo(L), hi = d2_feasible_hi(L);
    std::vector<int> d2_values;
    for (int d2 = lo; d2 < hi; d2 += d2_step) d2_values.push_back(d2);
    d2_values.push_back(hi);

    std::vector<WfGridPoint> grid;
    for (int d2 : d2_values) {
        const CodeDimensions dims = dimensions_for_length(L, d2, 200);
        const PuncturePattern p1 = upper_table.pattern_at(100 - dims.d1);
        const PuncturePattern p2 = lower_table.pattern_at(300 - dims.d2);
        WfGridPoint point;
        point.d2 = d2;
        point.threshold = threshold_search(dims, p1, p2, target_pb, n_iterations, opt);
        grid.push_back(point);
    }
    return grid;
}

int choose_d2_wf(const std::vector<WfGridPoint>& grid) {
    if (grid.empty()) throw std::invalid_argument("choose_d2_wf: empty grid");
    int best_d2 = -1;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : grid) {  // ascending d2, so ties land on the larger one
        if (!p.threshold.converged) continue;
        if (p.threshold.eb_n0_db_min <= best + 1e-9) {
            best = std::min(best, p.threshold.eb_n0_db_min);
            best_d2 = p.d2;
        }
    }
    if (best_d2 < 0) throw std::runtime_error("choose_d2_wf: no converged grid point");
    return best_d2;
}

void write_exit_csv(const std::string& path, const std::vector<ExitCurve>& curves) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_exit_csv: cannot open " + path);
    out << "ia,ie,component,eb_n0_db,d0,d1,d2\n";
    for (const auto& c : curves)
        for (const auto& p : c.points)
            out << p.ia << ',' << p.ie << ',' << c.component << ',' << c.eb_n0_db << ','
                << c.dims.d0 << ',' << c.dims.d1 << ',' << c.dims.d2 << "\n";
}

void write_threshold_csv(const std::string& path, const std::vector<WfGridPoint>& grid,
                         const Rational& rate) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_threshold_csv: cannot open " + path);
    out << "rate,d2,eb_n0_db_min,target_pb,iters\n";
    for (const auto& p : grid)
        out << rate.num << '/' << rate.den << ',' << p.d2 << ','
            << (p.threshold.converged ? p.threshold.eb_n0_db_min
                                      : std::numeric_limits<double>::quiet_NaN())
            << ',' << p.threshold.target_pb << ',' << p.threshold.n_iterations << "\n";
}

}  // namespace sccc
