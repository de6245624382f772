// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Analyses reuse a single regenerated pair of rate-compatible index
// tables; estimator seeds are fixed so reruns reproduce the same verdicts.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "sccc/channel.hpp"
#include "sccc/exit_chart.hpp"
#include "sccc/harness.hpp"
#include "sccc/numerics.hpp"
#include "sccc/optimizer.hpp"
#include "sccc/rng.hpp"
#include "sccc/sccc_code.hpp"
#include "sccc/wef.hpp"
#include "test_util.hpp"

using namespace sccc;

namespace {

int g_failures = 0;

bool check(const std::string& label, bool ok, const std::string& details) {
    std::printf("%s - %s (%s)\n", ok ? "PASS" : "FAIL", label.c_str(), details.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
    return ok;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return std::string(buf);
}

ExitEstimatorOptions estimator(uint64_t seed, int grid = 21, long long samples = 200000) {
    ExitEstimatorOptions opt;
    opt.grid_points = grid;
    opt.n_samples = samples;
    opt.frame_k = 10000;
    opt.seed = seed;
    opt.threads = 0;
    return opt;
}

PuncturePattern random_keep(int np, int ones, uint64_t seed) {
    Rng rng(seed);
    std::vector<int> idx(static_cast<size_t>(np));
    for (int i = 0; i < np; ++i) idx[static_cast<size_t>(i)] = i;
    for (int i = np - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.next_below(static_cast<uint64_t>(i) + 1));
        std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
    }
    PuncturePattern p;
    p.keep.assign(static_cast<size_t>(np), 0);
    for (int i = 0; i < ones; ++i) p.keep[static_cast<size_t>(idx[static_cast<size_t>(i)])] = 1;
    return p;
}

// ---- criterion 1: rate algebra ------------------------------------------

void criterion_1() {
    int cases = 0;
    bool ok = true;
    for (int d1 = 0; d1 <= 100 && ok; ++d1) {
        for (int d2 = 0; d2 <= 300; ++d2) {
            const int L = 200 + d1 + d2;
            const CodeDimensions dims = dimensions_for_length(L, d2, 200);
            if (dims.d1 != d1 || rate_from_counts(200, d1, d2) != Rational(200, L) ||
                200 * Rational(200, L).den / Rational(200, L).num != L) {
                ok = false;
                break;
            }
            ++cases;
        }
    }
    ok = ok && cases == 30401;
    ok = ok && d2_compromise(400) == 150 && d2_compromise(300) == 75 && d2_compromise(600) == 300;
    check("criterion 1: rate algebra (30401 pairs exact, compromise line anchors)", ok,
          fmt("%d pairs, d2(L=400/300/600) = %d/%d/%d", cases, d2_compromise(400),
              d2_compromise(300), d2_compromise(600)));
}

// ---- criterion 2: SISO vs brute-force MAP --------------------------------

void criterion_2() {
    const Trellis t = build_trellis(cc_1_5_7());
    const int k = 8;
    Rng rng(20240);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        LlrFrame pin(k), pout(2 * k);
        for (auto& v : pin) v = 8.0 * (rng.next_double() - 0.5);
        for (auto& v : pout) v = 8.0 * (rng.next_double() - 0.5);
        const auto res = siso_decode(t, pin, pout);
        const auto ref = testutil::brute_force_map(t, pin, pout);
        for (int i = 0; i < k; ++i)
            worst = std::max(worst,
                             std::abs(res.app_in[static_cast<size_t>(i)] - ref[static_cast<size_t>(i)]));
    }
    check("criterion 2: log-MAP SISO vs exhaustive MAP, K=8, 200 trials", worst <= 1e-6,
          fmt("max |dLLR| = %.2e (tolerance 1e-6)", worst));
}

// ---- criterion 3: enumerators vs exhaustive -------------------------------

void criterion_3() {
    const Trellis parity = build_trellis(cc_5_7());
    Rng rng(555);
    bool ok = true;
    int checked = 0;
    for (int trial = 0; trial < 20 && ok; ++trial) {
        const int k = 10 + 2 * static_cast<int>(rng.next_below(3));
        const auto end = (trial % 2 == 0) ? TrellisEnd::any_state : TrellisEnd::zero_state;
        const auto p1 = random_keep(100, 1 + static_cast<int>(rng.next_below(100)), 7000 + trial);
        const auto p2 = random_keep(300, 1 + static_cast<int>(rng.next_below(300)), 8000 + trial);
        const WefLimits wide{14, 40, 40};

        const auto uw = enumerate_upper(p1, k, wide, end);
        std::map<std::tuple<int, int, int>, double> uref;
        for (uint32_t x = 0; x < (1u << k); ++x) {
            BitVec u(static_cast<size_t>(k));
            int w = 0;
            for (int i = 0; i < k; ++i) {
                u[static_cast<size_t>(i)] = (x >> i) & 1;
                w += u[static_cast<size_t>(i)];
            }
            const auto enc = encode(parity, u);
            if (end == TrellisEnd::zero_state && enc.end_state != 0) continue;
            int ht = w, l = w;
            for (int s = 0; s < k; s += 2) {
                const int p = enc.coded[static_cast<size_t>(s)];
                l += p;
                if (p1.kept(static_cast<size_t>(s) / 2)) ht += p;
            }
            uref[{w, ht, l}] += 1.0;
        }
        size_t nonzero = 0;
        for (const auto& e : uw.entries) {
            if (uref[{e.w, e.h_t, e.l}] != e.mult) ok = false;
            ++nonzero;
        }
        if (nonzero != uref.size()) ok = false;

        const int n = k;
        const auto lw = enumerate_lower(p2, n, wide, end);
        std::map<std::pair<int, int>, double> lref;
        for (uint32_t x = 0; x < (1u << n); ++x) {
            BitVec z(static_cast<size_t>(n));
            int l = 0;
            for (int i = 0; i < n; ++i) {
                z[static_cast<size_t>(i)] = (x >> i) & 1;
                l += z[static_cast<size_t>(i)];
            }
            const auto enc = encode(parity, z);
            if (end == TrellisEnd::zero_state && enc.end_state != 0) continue;
            int h2 = 0;
            for (int s = 0; s < n; ++s)
                if (p2.kept(static_cast<size_t>(s))) h2 += enc.coded[static_cast<size_t>(s)];
            lref[{l, h2}] += 1.0;
        }
        size_t lcount = 0;
        for (const auto& e : lw.entries) {
            if (lref[{e.l, e.h2}] != e.mult) ok = false;
            ++lcount;
        }
        if (lcount != lref.size()) ok = false;
        ++checked;
    }
    check("criterion 3: trellis enumerators equal exhaustive counts (K,N <= 14)", ok,
          fmt("%d random pattern choices, both end conventions", checked));
}

// ---- criterion 4: rate-5/6 chart comparison --------------------------------

double criterion_4(const RateCompatibleTable& ut, const RateCompatibleTable& lt) {
    const auto dims = dimensions_for_length(240, 20, 200);
    const auto p1 = ut.pattern_at(100 - dims.d1);
    const auto p2 = lt.pattern_at(300 - dims.d2);

    const auto est_cl = estimator(424201, 31);
    const auto cl = exit_curve_classical(dims, p1, p2, 3.0, est_cl);
    const auto cl_traj = run_trajectory_classical(cl.outer, cl.inner, 50);
    const bool closed_at_3 = cl_traj.predicted_pb > 1e-5;

    const auto cl_thr =
        threshold_search_classical(dims, p1, p2, 1e-5, 50, est_cl, 3.0, 6.0);
    const bool opens_near_41 =
        cl_thr.converged && cl_thr.eb_n0_db_min >= 3.8 && cl_thr.eb_n0_db_min <= 4.4;

    const auto est_eq = estimator(424202, 41, 400000);
    const auto up = exit_curve_upper(dims, p1, 3.0, est_eq);
    const auto low = exit_curve_lower(dims, p2, 3.0, est_eq);
    const auto open_traj = run_trajectory(up, low, 60);
    const bool tunnel_open = open_traj.reached(1e-5);
    const auto traj10 = run_trajectory(up, low, 10);
    const bool ten_iter = traj10.reached(1e-5);

    const bool ok = closed_at_3 && opens_near_41 && tunnel_open && ten_iter;
    check("criterion 4: rate-5/6 chart comparison", ok,
          fmt("classical@3.0 pb=%.1e (closed=%d), classical opens at %.2f dB (in 4.1+-0.3: %d), "
              "equivalent tunnel open@3.0=%d (60-iter pb=%.1e), 10-iter pb=%.1e (<=1e-5: %d)",
              cl_traj.predicted_pb, closed_at_3 ? 1 : 0, cl_thr.eb_n0_db_min,
              opens_near_41 ? 1 : 0, tunnel_open ? 1 : 0, open_traj.predicted_pb,
              traj10.predicted_pb, ten_iter ? 1 : 0));
    return cl_thr.converged ? cl_thr.eb_n0_db_min : 99.0;
}

// ---- criterion 5: WF grids --------------------------------------------------

double criterion_5(const RateCompatibleTable& ut, const RateCompatibleTable& lt) {
    // the waterfall optimum is flat: neighbouring d2 tie at the default
    // 0.05 dB threshold quantization, so the grids bisect to 1/80 dB
    auto est5 = estimator(424205);
    est5.bisect_tol_db = 0.0125;
    const auto grid_half = wf_grid(400, ut, lt, 1e-5, 10, 10, est5);
    const int best_half = choose_d2_wf(grid_half);
    double thr_100 = 0.0;
    for (const auto& p : grid_half)
        if (p.d2 == 100 && p.threshold.converged) thr_100 = p.threshold.eb_n0_db_min;

    auto est6 = estimator(424206);
    est6.bisect_tol_db = 0.0125;
    const auto grid_23 = wf_grid(300, ut, lt, 1e-5, 10, 10, est6);
    const int best_23 = choose_d2_wf(grid_23);

    const bool ok5 = std::abs(best_half - 100) <= 10 && std::abs(thr_100 - 1.0) <= 0.25 &&
                     std::abs(best_23 - 50) <= 10 && choose_d2_ef(400) == 200 &&
                     choose_d2_ef(300) == 100;
    check("criterion 5: waterfall optima", ok5,
          fmt("R=1/2: argmin d2=%d (want 100+-10), thr(d2=100)=%.2f dB (want 1.0+-0.25); "
              "R=2/3: argmin d2=%d (want 50+-10); EF d2 = %d/%d (want 200/100)",
              best_half, thr_100, best_23, choose_d2_ef(400), choose_d2_ef(300)));
    write_threshold_csv("acceptance_wf_grid_half.csv", grid_half, Rational(1, 2));
    write_threshold_csv("acceptance_wf_grid_23.csv", grid_23, Rational(2, 3));
    return thr_100;
}

// ---- criterion 8: capacity gaps ---------------------------------------------

std::map<int, double> criterion_8(const RateCompatibleTable& ut, const RateCompatibleTable& lt) {
    std::map<int, double> threshold_by_length;
    bool ok8 = true;
    std::string detail;
    const std::vector<Rational> rates{{1, 2}, {2, 3}, {4, 5}, {9, 10}};
    for (size_t i = 0; i < rates.size(); ++i) {
        const int L = nearest_length_for_rate(rates[i]);
        const int d2 = d2_wf_line(L);
        const auto dims = dimensions_for_length(L, d2, 200);
        const auto p1 = ut.pattern_at(100 - dims.d1);
        const auto p2 = lt.pattern_at(300 - dims.d2);
        const auto thr = threshold_search(dims, p1, p2, 1e-5, 20, estimator(424208 + i));
        const double realized = dims.rate().to_double();
        const double gap = thr.converged ? bpsk_capacity_gap_db(realized, thr.eb_n0_db_min)
                                         : std::numeric_limits<double>::quiet_NaN();
        threshold_by_length[L] = thr.converged ? thr.eb_n0_db_min : 99.0;
        const bool in_window = thr.converged && gap >= 0.5 && gap <= 1.5;
        ok8 = ok8 && in_window;
        detail += fmt("%sL=%d d2=%d thr=%.2f gap=%.2f", i ? "; " : "", L, d2,
                      thr.converged ? thr.eb_n0_db_min : -99.0, gap);
    }
    check("criterion 8: capacity gap in [0.5, 1.5] dB (Pb=1e-5, 20 iters, WF d2)", ok8, detail);
    return threshold_by_length;
}

// ---- criterion 6: EF anchor ------------------------------------------------

void criterion_6(const RateCompatibleTable& ut, const RateCompatibleTable& lt) {
    const WefLimits limits{8, 40, 40};
    const auto uw = enumerate_upper(ut.pattern_at(100), 2000, limits, TrellisEnd::zero_state);
    const auto lw = enumerate_lower(lt.pattern_at(100), 3000, limits, TrellisEnd::zero_state);
    double snr = -99.0;
    bool ok = false;
    try {
        snr = ub_required_snr(uw, lw, 2000, 0.5, 1e-9);
        ok = std::abs(snr - 4.2) <= 0.4;
    } catch (const std::exception&) {
    }
    check("criterion 6: UB anchor R=1/2 d2=200 K=2000 Pb=1e-9", ok,
          fmt("required SNR = %.2f dB (want 4.2 +- 0.4, regenerated tables)", snr));
}

// ---- criterion 7: simulation/prediction consistency ------------------------

void criterion_7(const RateCompatibleTable& ut, const RateCompatibleTable& lt, double thr) {
    CodeDimensions dims = dimensions_for_length(400, 100, 2000);
    const auto p1 = ut.pattern_at(100 - dims.d1);
    const auto p2 = lt.pattern_at(300 - dims.d2);
    const auto cfg = make_sccc_config(dims, p1, p2, make_random_interleaver(dims.n(), 4242));
    // ">= 100 bit errors or 1e7 bits": run the full bit budget, since near the
    // waterfall knee 100 bit errors is only one or two frame bursts
    StopRule stop;
    stop.min_bit_errors = 1'000'000'000;
    stop.max_bits = 10'000'000;
    RunOptions opt;
    opt.n_iterations = 10;
    opt.seed = 20248;
    opt.threads = 0;
    const auto curve = run_ber(cfg, {thr + 0.5, thr - 0.5}, stop, opt);
    const double ber_hi = curve.points[0].ber();
    const double ber_lo = curve.points[1].ber();
    const bool ok = ber_hi <= 1e-4 && ber_lo >= 1e-2;
    check("criterion 7: K=2000 R=1/2 simulated BER brackets the EXIT threshold", ok,
          fmt("thr=%.2f dB; BER(thr+0.5)=%.2e (<=1e-4) on %lld bits/%lld frame errs; "
              "BER(thr-0.5)=%.2e (>=1e-2)",
              thr, ber_hi, curve.points[0].bits, curve.points[0].frame_errors, ber_lo));
}

// ---- criterion 9: property suites ------------------------------------------

void criterion_9(const RateCompatibleTable& ut, const RateCompatibleTable& lt) {
    bool ok = true;
    std::string detail;

    {  // extrinsic exclusion, exact
        const Trellis t = build_trellis(cc_1_5_7());
        Rng rng(31);
        LlrFrame pin(50), pout(100);
        for (auto& v : pin) v = 6.0 * (rng.next_double() - 0.5);
        for (auto& v : pout) v = 6.0 * (rng.next_double() - 0.5);
        const auto r = siso_decode(t, pin, pout);
        bool sub = true;
        for (size_t i = 0; i < pin.size(); ++i)
            sub = sub && (r.app_in[i] - pin[i] == r.extrinsic_in[i]);
        ok = ok && sub;
        detail += fmt("extrinsic-exclusion=%d", sub ? 1 : 0);
    }

    {  // encoder equivalence on 100 random frames
        Rng rng(32);
        bool sub = true;
        for (int variant = 0; variant < 4; ++variant) {
            const int d1 = 20 + 20 * variant, d2 = 30 + 50 * variant;
            CodeDimensions dims = dimensions_for_length(200 + d1 + d2, d2, 200);
            const auto cfg = make_sccc_config(dims, random_keep(100, d1, 600 + variant),
                                              random_keep(300, d2, 700 + variant),
                                              make_random_interleaver(dims.n(), 800 + variant));
            for (int f = 0; f < 25; ++f) {
                const auto u = testutil::random_bits(200, rng);
                sub = sub && (sccc_encode(cfg, u).serialized() ==
                              testutil::classical_reference_encode(cfg, u));
            }
        }
        ok = ok && sub;
        detail += fmt("; classical==equivalent(100 frames)=%d", sub ? 1 : 0);
    }

    {  // interleaver round-trip and S constraint
        const auto ilv = make_s_random_interleaver(300, 12, 9);
        bool sub = true;
        for (int i = 0; i < 300; ++i)
            for (int j = i + 1; j < 300 && j - i <= 12; ++j)
                sub = sub && std::abs(ilv.perm[static_cast<size_t>(i)] -
                                      ilv.perm[static_cast<size_t>(j)]) > 12;
        Rng rng(33);
        std::vector<double> frame(300);
        for (auto& v : frame) v = rng.next_double();
        sub = sub && (inverse_permute(ilv, permute(ilv, frame)) == frame);
        ok = ok && sub;
        detail += fmt("; interleaver=%d", sub ? 1 : 0);
    }

    {  // nestedness of the regenerated tables
        bool sub = true;
        for (int n = 0; n < 100; ++n) {
            const auto a = ut.pattern_at(n), b = ut.pattern_at(n + 1);
            for (int i = 0; i < 100; ++i)
                if (b.keep[static_cast<size_t>(i)] && !a.keep[static_cast<size_t>(i)]) sub = false;
        }
        for (int n = 0; n < 300; ++n) {
            const auto a = lt.pattern_at(n), b = lt.pattern_at(n + 1);
            for (int i = 0; i < 300; ++i)
                if (b.keep[static_cast<size_t>(i)] && !a.keep[static_cast<size_t>(i)]) sub = false;
        }
        ok = ok && sub;
        detail += fmt("; table-nestedness=%d", sub ? 1 : 0);
    }

    {  // UB monotone in SNR, decreasing in K
        const WefLimits limits{8, 40, 40};
        const auto p1 = ut.pattern_at(100);
        const auto p2 = lt.pattern_at(100);
        const auto uw2 = enumerate_upper(p1, 2000, limits, TrellisEnd::zero_state);
        const auto lw2 = enumerate_lower(p2, 3000, limits, TrellisEnd::zero_state);
        const auto uw4 = enumerate_upper(p1, 4000, limits, TrellisEnd::zero_state);
        const auto lw4 = enumerate_lower(p2, 6000, limits, TrellisEnd::zero_state);
        bool sub = true;
        double prev = 1e300;
        for (double db = 1.0; db <= 8.0; db += 0.5) {
            const double pb = union_bound(uw2, lw2, 2000, 0.5, db);
            sub = sub && pb < prev;
            prev = pb;
        }
        sub = sub && union_bound(uw4, lw4, 4000, 0.5, 4.5) < union_bound(uw2, lw2, 2000, 0.5, 4.5);
        ok = ok && sub;
        detail += fmt("; ub-monotone=%d", sub ? 1 : 0);
    }

    {  // MI estimator bounds and J inversion
        bool sub = true;
        for (double mi = 0.001; mi <= 0.999; mi += 0.001)
            sub = sub && std::abs(j_function(j_inverse(mi)) - mi) <= 1e-6;
        Rng rng(34);
        BitVec bits(20000);
        for (auto& b : bits) b = static_cast<uint8_t>(rng.next_bit());
        for (double target : {0.0, 0.3, 0.7, 1.0}) {
            const double got = measure_mi(gen_prior(target, bits, rng), bits);
            sub = sub && got >= 0.0 && got <= 1.0 && std::abs(got - target) <= 0.02;
        }
        ok = ok && sub;
        detail += fmt("; mi/J=%d", sub ? 1 : 0);
    }

    {  // order-independent parallel aggregation
        CodeDimensions dims = dimensions_for_length(400, 100, 400);
        const auto cfg = make_sccc_config(dims, PuncturePattern::all_ones(100),
                                          random_keep(300, 100, 900),
                                          make_random_interleaver(dims.n(), 901));
        StopRule stop;
        stop.max_bits = 60000;
        stop.min_bit_errors = 40;
        RunOptions o1;
        o1.n_iterations = 3;
        o1.seed = 77;
        o1.threads = 1;
        RunOptions o4 = o1;
        o4.threads = 4;
        const auto a = run_ber(cfg, {1.0}, stop, o1);
        const auto b = run_ber(cfg, {1.0}, stop, o4);
        const bool sub = a.points[0].bit_errors == b.points[0].bit_errors &&
                         a.points[0].bits == b.points[0].bits &&
                         a.points[0].frame_errors == b.points[0].frame_errors;
        ok = ok && sub;
        detail += fmt("; parallel-aggregation=%d", sub ? 1 : 0);
    }

    check("criterion 9: property suites", ok, detail);
}

// ---- module-invariant extras -----------------------------------------------

void extra_invariants(const RateCompatibleTable& ut, const RateCompatibleTable& lt,
                      const std::map<int, double>& thresholds, double thr_half,
                      double classical_thr_56) {
    {  // the equivalent decomposition beats the classical chart by >= 0.8 dB
        const auto dims = dimensions_for_length(240, 20, 200);
        const auto thr = threshold_search(dims, ut.pattern_at(100 - dims.d1),
                                          lt.pattern_at(300 - dims.d2), 1e-5, 50,
                                          estimator(424210, 31));
        const double gain = classical_thr_56 - (thr.converged ? thr.eb_n0_db_min : 99.0);
        check("invariant: equivalent-chart threshold beats the classical one by >= 0.8 dB",
              thr.converged && gain >= 0.8,
              fmt("equivalent %.2f dB vs classical %.2f dB (gain %.2f)",
                  thr.converged ? thr.eb_n0_db_min : -99.0, classical_thr_56, gain));
    }
    {  // EF floor flatness across rates at (threshold + 1 dB), within 2 decades
        const WefLimits limits{8, 40, 40};
        double lo = 1e300, hi = 0.0;
        std::string detail;
        for (const auto& [L, thr] : thresholds) {
            const int d2 = d2_wf_line(L);
            CodeDimensions dims = dimensions_for_length(L, d2, 2000);
            const auto uw = enumerate_upper(ut.pattern_at(100 - dims.d1), 2000, limits,
                                            TrellisEnd::zero_state);
            const auto lw = enumerate_lower(lt.pattern_at(300 - dims.d2), 3000, limits,
                                            TrellisEnd::zero_state);
            const double pb = union_bound(uw, lw, 2000, dims.rate().to_double(), thr + 1.0);
            lo = std::min(lo, pb);
            hi = std::max(hi, pb);
            detail += fmt("L=%d floor=%.1e ", L, pb);
        }
        check("invariant: EF floor flat across rates (within two decades)", hi <= 100.0 * lo,
              detail + fmt("ratio=%.1f", hi / lo));
    }

    {  // decoder trajectory tracks the chart at K=16400 for 5 iterations
        CodeDimensions dims = dimensions_for_length(400, 100, 16400);
        const auto p1 = ut.pattern_at(0);
        const auto p2 = lt.pattern_at(200);
        const double probe = thr_half + 0.25;
        const auto est = estimator(424209);
        const auto up = exit_curve_upper(dims, p1, probe, est);
        const auto low = exit_curve_lower(dims, p2, probe, est);
        const auto traj = run_trajectory(up, low, 5);

        const auto cfg = make_sccc_config(dims, p1, p2, make_random_interleaver(dims.n(), 77));
        const auto params = ChannelParams::from_ebn0(probe, 0.5);
        const int n_frames = 6;
        std::vector<double> mi_ext(5, 0.0);
        for (int f = 0; f < n_frames; ++f) {
            Rng rng(Rng::derive(31337, static_cast<uint64_t>(f)));
            const uint64_t noise_seed = rng.next_u64();
            const auto u = testutil::random_bits(static_cast<size_t>(dims.k), rng);
            const auto par1 = encode(cfg.lower_trellis, u).coded;
            BitVec v(u);
            v.resize(static_cast<size_t>(dims.n()));
            for (int j = 0; j < dims.k / 2; ++j)
                v[static_cast<size_t>(dims.k + j)] = par1[static_cast<size_t>(2 * j)];
            const auto z = permute(cfg.interleaver, v);
            const auto y = transmit(sccc_encode(cfg, u).serialized(), params, noise_seed);
            DecodeOptions dopt;
            dopt.record_messages = true;
            const auto dec = sccc_decode(cfg, channel_llrs(y, params.sigma2), 5, dopt);
            for (int it = 0; it < 5; ++it)
                mi_ext[static_cast<size_t>(it)] +=
                    measure_mi(dec.ext_from_lower[static_cast<size_t>(it)], z) / n_frames;
        }
        bool ok = true;
        std::string detail = fmt("probe=%.2f dB;", probe);
        for (int it = 0; it < 5; ++it) {
            const double chart = traj.steps[static_cast<size_t>(it)].i_ext_lower;
            const double sim = mi_ext[static_cast<size_t>(it)];
            ok = ok && std::abs(chart - sim) <= 0.05;
            detail += fmt(" it%d %.3f/%.3f", it + 1, sim, chart);
        }
        check("invariant: K=16400 decoder tracks the chart for 5 iterations (+-0.05)", ok, detail);
    }
}

}  // namespace

int main() {
    std::printf("regenerating rate-compatible tables (greedy IOWEF search)...\n");
    std::fflush(stdout);
    GreedyOptions greedy;
    greedy.threads = 0;
    const auto upper_search = greedy_upper_table(greedy);
    const auto lower_search = greedy_lower_table(greedy);
    const auto& ut = upper_search.table;
    const auto& lt = lower_search.table;
    write_table(ut, "acceptance_upper_table.txt");
    write_table(lt, "acceptance_lower_table.txt");
    write_search_log(upper_search, "acceptance_upper_log.json");
    write_search_log(lower_search, "acceptance_lower_log.json");

    criterion_1();
    criterion_2();
    criterion_3();
    const double classical_thr_56 = criterion_4(ut, lt);
    const double thr_half = criterion_5(ut, lt);
    criterion_6(ut, lt);
    criterion_7(ut, lt, thr_half);
    const auto thresholds = criterion_8(ut, lt);
    criterion_9(ut, lt);
    extra_invariants(ut, lt, thresholds, thr_half, classical_thr_56);

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
