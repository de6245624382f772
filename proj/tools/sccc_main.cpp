// Command-line front end: configuration/rate algebra, table regeneration,
// EXIT and bound analyses, Monte Carlo simulation. Subcommands write
// plot-ready CSV files; stdout carries short human-readable summaries.
//
// Exit codes: 0 success, 2 infeasible configuration, 3 numerical
// non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sccc/channel.hpp"
#include "sccc/exit_chart.hpp"
#include "sccc/harness.hpp"
#include "sccc/interleaving.hpp"
#include "sccc/optimizer.hpp"
#include "sccc/puncturing.hpp"
#include "sccc/sccc_code.hpp"
#include "sccc/wef.hpp"

namespace {

using namespace sccc;

uint64_t resolve_seed(uint64_t seed) {
    if (seed != 0) return seed;
    std::random_device rd;
    const uint64_t s = (static_cast<uint64_t>(rd()) << 32) ^ rd();
    std::printf("seed (auto): %llu\n", static_cast<unsigned long long>(s));
    return s ? s : 1;
}

struct DimsArgs {
    std::string rate_text;
    int length = 0;
    int d1 = -1;
    int d2 = -1;
    int k = 200;

    void attach(CLI::App* cmd, bool with_k = true) {
        cmd->add_option("--rate", rate_text, "target overall rate, e.g. 1/2");
        cmd->add_option("--length,-L", length, "transmitted bits per 200 info bits (L = 200/R)");
        cmd->add_option("--d1", d1, "transmitted upper parity bits per period (0..100)");
        cmd->add_option("--d2", d2, "transmitted lower parity bits per period (0..300)");
        if (with_k) cmd->add_option("-K,--info-bits", k, "information bits per frame");
    }

    CodeDimensions resolve() const {
        int L = length;
        if (L == 0 && !rate_text.empty()) L = nearest_length_for_rate(parse_rate(rate_text));
        if (L == 0 && d1 >= 0 && d2 >= 0) L = 200 + d1 + d2;
        if (L == 0) throw std::domain_error("specify --rate, --length, or --d1/--d2");
        int eff_d2 = d2;
        if (eff_d2 < 0 && d1 >= 0) eff_d2 = L - 200 - d1;
        if (eff_d2 < 0) throw std::domain_error("specify --d2 (or --d1)");
        return dimensions_for_length(L, eff_d2, k);
    }
};

void print_dims(const CodeDimensions& dims) {
    const Rational r = dims.rate();
    std::printf("D = [%d, %d, %d]  L = %d  R = %lld/%lld (%.6f)\n", dims.d0, dims.d1, dims.d2,
                dims.pattern_period_total(), static_cast<long long>(r.num),
                static_cast<long long>(r.den), r.to_double());
    std::printf("rho = [%g, %g, %g]  K = %d  N = %d\n", dims.rho0(), dims.rho1(), dims.rho2(),
                dims.k, dims.n());
}

RateCompatibleTable load_table(const std::string& path, const std::string& expect_tag) {
    RateCompatibleTable t = read_table(path);
    if (t.code_tag != expect_tag)
        throw std::domain_error("table " + path + " is tagged '" + t.code_tag + "', expected '" +
                                expect_tag + "'");
    return t;
}

Interleaver build_interleaver(int n, uint64_t seed, int s_random) {
    if (s_random > 0) return make_s_random_interleaver(n, s_random, seed);
    return make_random_interleaver(n, seed);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rate-compatible SCCC design and analysis toolkit"};
    app.require_subcommand(1);

    // ---- rate -----------------------------------------------------------
    auto* rate_cmd = app.add_subcommand("rate", "compute code dimensions from D-vector or rate");
    DimsArgs rate_args;
    double rho1 = -1, rho2 = -1;
    rate_args.attach(rate_cmd);
    rate_cmd->add_option("--rho1", rho1, "upper parity permeability (d1 = 100 rho1)");
    rate_cmd->add_option("--rho2", rho2, "lower parity permeability (d2 = 300 rho2)");

    // ---- tables ---------------------------------------------------------
    auto* tables_cmd =
        app.add_subcommand("tables", "regenerate the rate-compatible puncturing index tables");
    std::string out_dir = ".";
    GreedyOptions greedy_opt;
    int threads = 0;
    tables_cmd->add_option("--out-dir", out_dir, "output directory");
    tables_cmd->add_option("--ref-snr", greedy_opt.ref_snr_db, "scoring Eb/N0 in dB")
        ->capture_default_str();
    tables_cmd->add_option("--wmax", greedy_opt.limits.w_max, "search w truncation")
        ->capture_default_str();
    tables_cmd->add_option("--hmax", greedy_opt.limits.h_max, "search h truncation")
        ->capture_default_str();
    tables_cmd->add_option("--lmax", greedy_opt.limits.l_max, "search l truncation")
        ->capture_default_str();

    // ---- strategy -------------------------------------------------------
    auto* strat_cmd = app.add_subcommand("strategy", "d2 choice for a rate: ef, wf or compromise");
    DimsArgs strat_args;
    std::string mode = "compromise";
    strat_cmd->add_option("--rate", strat_args.rate_text, "target overall rate")->required();
    strat_cmd->add_option("--mode", mode, "ef | wf | compromise")->capture_default_str();

    // ---- exit-curve -----------------------------------------------------
    auto* exit_cmd = app.add_subcommand("exit-curve", "EXIT transfer curves at one Eb/N0");
    DimsArgs exit_args;
    exit_args.attach(exit_cmd, false);
    double ebn0 = 3.0;
    bool classical = false;
    int iters = 10;
    std::string upper_path = "upper_table.txt", lower_path = "lower_table.txt";
    std::string out_csv = "exit_curves.csv";
    ExitEstimatorOptions est;
    uint64_t cli_seed = 0;
    exit_cmd->add_option("--ebn0", ebn0, "Eb/N0 in dB")->required();
    exit_cmd->add_flag("--classical", classical, "emit outer/inner curves of the classical chart");
    exit_cmd->add_option("--upper-table", upper_path, "upper index table file");
    exit_cmd->add_option("--lower-table", lower_path, "lower index table file");
    exit_cmd->add_option("--samples", est.n_samples, "measured bits per grid point")
        ->capture_default_str();
    exit_cmd->add_option("--grid", est.grid_points, "a-priori grid points")->capture_default_str();
    exit_cmd->add_option("--frame-k", est.frame_k, "info bits per estimation frame")
        ->capture_default_str();
    exit_cmd->add_option("--iters", iters, "iterations for the trajectory summary")
        ->capture_default_str();
    exit_cmd->add_option("--seed", cli_seed, "random seed (0 = auto)");
    exit_cmd->add_option("--out", out_csv, "output CSV")->capture_default_str();

    // ---- threshold ------------------------------------------------------
    auto* thr_cmd = app.add_subcommand("threshold", "EXIT convergence threshold for one D vector");
    DimsArgs thr_args;
    thr_args.attach(thr_cmd, false);
    double target_pb = 1e-5;
    bool thr_classical = false;
    thr_cmd->add_option("--target-pb", target_pb, "target bit error probability")
        ->capture_default_str();
    thr_cmd->add_option("--iters", iters, "decoder iterations (one = lower+upper pass)")
        ->capture_default_str();
    thr_cmd->add_flag("--classical", thr_classical, "use the classical outer/inner chart");
    thr_cmd->add_option("--upper-table", upper_path, "upper index table file");
    thr_cmd->add_option("--lower-table", lower_path, "lower index table file");
    thr_cmd->add_option("--samples", est.n_samples, "measured bits per grid point");
    thr_cmd->add_option("--grid", est.grid_points, "a-priori grid points");
    thr_cmd->add_option("--frame-k", est.frame_k, "info bits per estimation frame");
    thr_cmd->add_option("--bisect-tol", est.bisect_tol_db, "threshold resolution in dB");
    thr_cmd->add_option("--seed", cli_seed, "random seed (0 = auto)");

    // ---- wf-grid --------------------------------------------------------
    auto* wf_cmd = app.add_subcommand("wf-grid", "thresholds over feasible d2 and the WF optimum");
    std::string wf_rate;
    int d2_step = 10;
    std::string wf_out = "wf_grid.csv";
    wf_cmd->add_option("--rate", wf_rate, "target overall rate")->required();
    wf_cmd->add_option("--step", d2_step, "d2 grid step")->capture_default_str();
    wf_cmd->add_option("--target-pb", target_pb, "target bit error probability");
    wf_cmd->add_option("--iters", iters, "decoder iterations");
    wf_cmd->add_option("--upper-table", upper_path, "upper index table file");
    wf_cmd->add_option("--lower-table", lower_path, "lower index table file");
    wf_cmd->add_option("--samples", est.n_samples, "measured bits per grid point");
    wf_cmd->add_option("--grid", est.grid_points, "a-priori grid points");
    wf_cmd->add_option("--frame-k", est.frame_k, "info bits per estimation frame");
    wf_cmd->add_option("--bisect-tol", est.bisect_tol_db, "threshold resolution in dB");
    wf_cmd->add_option("--seed", cli_seed, "random seed (0 = auto)");
    wf_cmd->add_option("--out", wf_out, "output CSV")->capture_default_str();

    // ---- bound ----------------------------------------------------------
    auto* bound_cmd = app.add_subcommand("bound", "union bound curve for one configuration");
    DimsArgs bound_args;
    bound_args.attach(bound_cmd);
    double snr_min = 0.0, snr_max = 10.0, snr_step = 0.5;
    WefLimits bound_limits;
    bool any_end = false;
    std::string bound_out = "bound.csv";
    bound_cmd->add_option("--snr-min", snr_min, "first Eb/N0 in dB")->capture_default_str();
    bound_cmd->add_option("--snr-max", snr_max, "last Eb/N0 in dB")->capture_default_str();
    bound_cmd->add_option("--snr-step", snr_step, "Eb/N0 step in dB")->capture_default_str();
    bound_cmd->add_option("--wmax", bound_limits.w_max, "w truncation")->capture_default_str();
    bound_cmd->add_option("--hmax", bound_limits.h_max, "h truncation")->capture_default_str();
    bound_cmd->add_option("--lmax", bound_limits.l_max, "l truncation")->capture_default_str();
    bound_cmd->add_flag("--any-end-state", any_end,
                        "count truncated paths ending in any state (default: zero state)");
    bound_cmd->add_option("--upper-table", upper_path, "upper index table file");
    bound_cmd->add_option("--lower-table", lower_path, "lower index table file");
    bound_cmd->add_option("--out", bound_out, "output CSV")->capture_default_str();

    // ---- ub-grid --------------------------------------------------------
    auto* ub_cmd = app.add_subcommand("ub-grid", "EF required SNR over feasible d2");
    std::string ub_rate;
    int ub_k = 2000;
    double ub_target = 1e-9;
    std::string ub_out = "ub_grid.csv";
    ub_cmd->add_option("--rate", ub_rate, "target overall rate")->required();
    ub_cmd->add_option("-K,--info-bits", ub_k, "block length for the bound")
        ->capture_default_str();
    ub_cmd->add_option("--target-pb", ub_target, "EF target bit error probability")
        ->capture_default_str();
    ub_cmd->add_option("--step", d2_step, "d2 grid step");
    ub_cmd->add_option("--wmax", bound_limits.w_max, "w truncation");
    ub_cmd->add_option("--hmax", bound_limits.h_max, "h truncation");
    ub_cmd->add_option("--lmax", bound_limits.l_max, "l truncation");
    ub_cmd->add_option("--upper-table", upper_path, "upper index table file");
    ub_cmd->add_option("--lower-table", lower_path, "lower index table file");
    ub_cmd->add_option("--out", ub_out, "output CSV")->capture_default_str();

    // ---- simulate -------------------------------------------------------
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo BER/FER over an SNR grid");
    DimsArgs sim_args;
    sim_args.attach(sim_cmd);
    std::vector<double> snr_list;
    StopRule stop;
    RunOptions run_opt;
    uint64_t ilv_seed = 0;
    int s_random = 0;
    bool max_log = false;
    std::string sim_out = "ber.csv", manifest_out = "run_manifest.json", dump_frame_path;
    sim_cmd->add_option("--snr", snr_list, "Eb/N0 grid in dB")->required()->expected(-1);
    sim_cmd->add_option("--iters", run_opt.n_iterations, "decoder iterations")
        ->capture_default_str();
    sim_cmd->add_option("--min-errors", stop.min_bit_errors, "bit errors per point before stop")
        ->capture_default_str();
    sim_cmd->add_option("--max-bits", stop.max_bits, "bit budget per point")
        ->capture_default_str();
    sim_cmd->add_option("--max-frames", stop.max_frames, "frame budget per point");
    sim_cmd->add_option("--seed", cli_seed, "master seed (0 = auto, recorded in manifest)");
    sim_cmd->add_option("--interleaver-seed", ilv_seed, "interleaver seed (default: from seed)");
    sim_cmd->add_option("--s-random", s_random, "use an S-random interleaver with this S");
    sim_cmd->add_flag("--max-log", max_log, "use the max-log-MAP approximation");
    sim_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
    sim_cmd->add_option("--upper-table", upper_path, "upper index table file");
    sim_cmd->add_option("--lower-table", lower_path, "lower index table file");
    sim_cmd->add_option("--out", sim_out, "results CSV")->capture_default_str();
    sim_cmd->add_option("--manifest", manifest_out, "JSON run manifest")->capture_default_str();
    sim_cmd->add_option("--dump-frame", dump_frame_path, "write one encoded frame as JSON");
    std::string iter_out;
    sim_cmd->add_option("--iter-out", iter_out, "also write per-iteration BER CSV here");
    std::string ilv_out;
    sim_cmd->add_option("--dump-interleaver", ilv_out, "write the interleaver permutation here");
    bool uncoded = false;
    sim_cmd->add_flag("--uncoded", uncoded, "uncoded BPSK reference instead of the SCCC");

    // ---- predict --------------------------------------------------------
    auto* pred_cmd =
        app.add_subcommand("predict", "combined EXIT waterfall + union bound floor prediction");
    DimsArgs pred_args;
    pred_args.attach(pred_cmd);
    std::string pred_out = "prediction.csv";
    pred_cmd->add_option("--snr", snr_list, "Eb/N0 grid in dB")->required()->expected(-1);
    pred_cmd->add_option("--iters", iters, "decoder iterations");
    pred_cmd->add_option("--upper-table", upper_path, "upper index table file");
    pred_cmd->add_option("--lower-table", lower_path, "lower index table file");
    pred_cmd->add_option("--samples", est.n_samples, "measured bits per grid point");
    pred_cmd->add_option("--grid", est.grid_points, "a-priori grid points");
    pred_cmd->add_option("--frame-k", est.frame_k, "info bits per estimation frame");
    pred_cmd->add_option("--wmax", bound_limits.w_max, "w truncation");
    pred_cmd->add_option("--hmax", bound_limits.h_max, "h truncation");
    pred_cmd->add_option("--lmax", bound_limits.l_max, "l truncation");
    pred_cmd->add_option("--seed", cli_seed, "random seed (0 = auto)");
    pred_cmd->add_option("--out", pred_out, "output CSV")->capture_default_str();

    app.add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

    // one TOML-style config file with [subcommand] sections; flags override
    // file values, and global flags may follow the subcommand
    app.set_config("--config", "", "configuration file (flags override)");
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough(true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (rate_cmd->parsed()) {
            DimsArgs a = rate_args;
            if (rho1 >= 0) a.d1 = static_cast<int>(std::lround(rho1 * 100));
            if (rho2 >= 0) a.d2 = static_cast<int>(std::lround(rho2 * 300));
            print_dims(a.resolve());
            return 0;
        }

        if (tables_cmd->parsed()) {
            greedy_opt.threads = threads;
            const auto upper = greedy_upper_table(greedy_opt);
            const auto lower = greedy_lower_table(greedy_opt);
            write_table(upper.table, out_dir + "/upper_table.txt");
            write_table(lower.table, out_dir + "/lower_table.txt");
            write_search_log(upper, out_dir + "/upper_search_log.json");
            write_search_log(lower, out_dir + "/lower_search_log.json");
            std::printf("wrote %s/{upper_table.txt,lower_table.txt} and search logs\n",
                        out_dir.c_str());
            return 0;
        }

        if (strat_cmd->parsed()) {
            const int L = nearest_length_for_rate(parse_rate(strat_args.rate_text));
            int d2;
            if (mode == "ef")
                d2 = choose_d2_ef(L);
            else if (mode == "wf")
                d2 = d2_wf_line(L);
            else if (mode == "compromise")
                d2 = d2_compromise(L);
            else
                throw std::domain_error("strategy: mode must be ef, wf or compromise");
            std::printf("mode=%s d2=%d\n", mode.c_str(), d2);
            print_dims(dimensions_for_length(L, d2, 200));
            return 0;
        }

        if (exit_cmd->parsed()) {
            const CodeDimensions dims = exit_args.resolve();
            const auto ut = load_table(upper_path, "upper");
            const auto lt = load_table(lower_path, "lower");
            est.seed = resolve_seed(cli_seed);
            est.threads = threads;
            const auto p1 = ut.pattern_at(100 - dims.d1);
            const auto p2 = lt.pattern_at(300 - dims.d2);
            std::vector<ExitCurve> curves;
            if (classical) {
                auto c = exit_curve_classical(dims, p1, p2, ebn0, est);
                curves = {std::move(c.outer), std::move(c.inner)};
            } else {
                curves.push_back(exit_curve_upper(dims, p1, ebn0, est));
                curves.push_back(exit_curve_lower(dims, p2, ebn0, est));
                const auto traj = run_trajectory(curves[0], curves[1], iters);
                std::printf("trajectory (%d iters): final I_app=%.6f predicted Pb=%.3e\n", iters,
                            traj.final_i_app, traj.predicted_pb);
            }
            write_exit_csv(out_csv, curves);
            std::printf("wrote %s\n", out_csv.c_str());
            return 0;
        }

        if (thr_cmd->parsed()) {
            const CodeDimensions dims = thr_args.resolve();
            const auto ut = load_table(upper_path, "upper");
            const auto lt = load_table(lower_path, "lower");
            est.seed = resolve_seed(cli_seed);
            est.threads = threads;
            const auto p1 = ut.pattern_at(100 - dims.d1);
            const auto p2 = lt.pattern_at(300 - dims.d2);
            const auto res = thr_classical
                                 ? threshold_search_classical(dims, p1, p2, target_pb, iters, est)
                                 : threshold_search(dims, p1, p2, target_pb, iters, est);
            if (!res.converged) {
                std::fprintf(stderr, "threshold: no convergence within the search bracket\n");
                return 3;
            }
            std::printf("threshold: %.2f dB (target Pb=%.1e, %d iterations)\n", res.eb_n0_db_min,
                        res.target_pb, res.n_iterations);
            return 0;
        }

        if (wf_cmd->parsed()) {
            const Rational r = parse_rate(wf_rate);
            const int L = nearest_length_for_rate(r);
            const auto ut = load_table(upper_path, "upper");
            const auto lt = load_table(lower_path, "lower");
            est.seed = resolve_seed(cli_seed);
            est.threads = threads;
            const auto grid = wf_grid(L, ut, lt, target_pb, iters, d2_step, est);
            write_threshold_csv(wf_out, grid, Rational(200, L));
            const int best = choose_d2_wf(grid);
            std::printf("wf optimum: d2=%d\n", best);
            std::printf("wrote %s\n", wf_out.c_str());
            return 0;
        }

        if (bound_cmd->parsed()) {
            const CodeDimensions dims = bound_args.resolve();
            const auto ut = load_table(upper_path, "upper");
            const auto lt = load_table(lower_path, "lower");
            const auto end = any_end ? TrellisEnd::any_state : TrellisEnd::zero_state;
            const auto p1 = ut.pattern_at(100 - dims.d1);
            const auto p2 = lt.pattern_at(300 - dims.d2);
            const auto uw = enumerate_upper(p1, dims.k, bound_limits, end);
            const auto lw = enumerate_lower(p2, dims.n(), bound_limits, end);
            std::vector<double> grid;
            for (double db = snr_min; db <= snr_max + 1e-9; db += snr_step) grid.push_back(db);
            const auto curve = bound_curve(uw, lw, dims, grid);
            write_bound_csv(bound_out, curve);
            std::printf("wrote %s\n", bound_out.c_str());
            return 0;
        }

        if (ub_cmd->parsed()) {
            const Rational r = parse_rate(ub_rate);
            const int L = nearest_length_for_rate(r);
            const auto ut = load_table(upper_path, "upper");
            const auto lt = load_table(lower_path, "lower");
            std::ofstream out(ub_out);
            out << "rate,d2,eb_n0_db_min,target_pb,k\n";
            for (int d2 = d2_feasible_lo(L); d2 <= d2_feasible_hi(L); d2 += d2_step) {
                CodeDimensions dims = dimensions_for_length(L, d2, 200);
                dims.k = ub_k;
                const auto p1 = ut.pattern_at(100 - dims.d1);
                const auto p2 = lt.pattern_at(300 - dims.d2);
                const auto uw =
                    enumerate_upper(p1, dims.k, bound_limits, TrellisEnd::zero_state);
                const auto lw =
                    enumerate_lower(p2, dims.n(), bound_limits, TrellisEnd::zero_state);
                const double req =
                    ub_required_snr(uw, lw, dims.k, dims.rate().to_double(), ub_target);
                out << 200.0 / L << ',' << d2 << ',' << req << ',' << ub_target << ',' << ub_k
                    << "\n";
                std::printf("d2=%3d: %.2f dB\n", d2, req);
            }
            std::printf("wrote %s\n", ub_out.c_str());
            return 0;
        }

        if (sim_cmd->parsed()) {
            const uint64_t seed = resolve_seed(cli_seed);
            if (uncoded) {
                std::ofstream out(sim_out);
                out << "eb_n0_db,ber,fer,bits,frames,bit_errors,frame_errors\n";
                out.precision(10);
                for (double db : snr_list) {
                    const auto p = uncoded_ber_point(db, stop.max_bits, seed);
                    out << p.eb_n0_db << ',' << p.ber() << ',' << p.fer() << ',' << p.bits << ','
                        << p.frames << ',' << p.bit_errors << ',' << p.frame_errors << "\n";
                }
                std::printf("wrote %s\n", sim_out.c_str());
                return 0;
            }
            const CodeDimensions dims = sim_args.resolve();
            const auto ut = load_table(upper_path, "upper");
            const auto lt = load_table(lower_path, "lower");
            const auto p1 = ut.pattern_at(100 - dims.d1);
            const auto p2 = lt.pattern_at(300 - dims.d2);
            const auto ilv =
                build_interleaver(dims.n(), ilv_seed ? ilv_seed : Rng::derive(seed, 0xA11),
                                  s_random);
            if (!ilv_out.empty()) write_interleaver(ilv, ilv_out);
            const auto cfg = make_sccc_config(dims, p1, p2, ilv);
            run_opt.seed = seed;
            run_opt.threads = threads;
            run_opt.arith = max_log ? SisoArithmetic::max_log_map : SisoArithmetic::log_map;
            run_opt.record_iteration_ber = !iter_out.empty();
            if (!dump_frame_path.empty()) {
                Rng rng(seed);
                BitVec u(static_cast<size_t>(dims.k));
                for (auto& b : u) b = static_cast<uint8_t>(rng.next_bit());
                std::ofstream dump(dump_frame_path);
                dump << frame_dump_json(cfg, u, sccc_encode(cfg, u), seed) << "\n";
            }
            {
                std::ofstream mf(manifest_out);
                mf << run_manifest_json(cfg, snr_list, stop, run_opt) << "\n";
            }
            const auto curve = run_ber(cfg, snr_list, stop, run_opt);
            write_ber_csv(sim_out, curve);
            if (!iter_out.empty()) write_iteration_ber_csv(iter_out, curve);
            for (const auto& p : curve.points)
                std::printf("%.2f dB: ber=%.3e fer=%.3e (%lld bits, %lld errors)\n", p.eb_n0_db,
                            p.ber(), p.fer(), p.bits, p.bit_errors);
            std::printf("wrote %s and %s\n", sim_out.c_str(), manifest_out.c_str());
            return 0;
        }

        if (pred_cmd->parsed()) {
            const CodeDimensions dims = pred_args.resolve();
            const auto ut = load_table(upper_path, "upper");
            const auto lt = load_table(lower_path, "lower");
            est.seed = resolve_seed(cli_seed);
            est.threads = threads;
            const auto p1 = ut.pattern_at(100 - dims.d1);
            const auto p2 = lt.pattern_at(300 - dims.d2);
            const auto pred = combined_prediction(dims, p1, p2, dims.k, snr_list, iters, est,
                                                  bound_limits);
            write_prediction_csv(pred_out, pred);
            if (!pred.crossover_found)
                std::printf("note: EXIT and bound curves do not cross inside the grid\n");
            std::printf("wrote %s\n", pred_out.c_str());
            return 0;
        }
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
