#include "sccc/wef.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "sccc/numerics.hpp"

namespace sccc {

namespace {

// ln Q(x) that stays finite where q_func underflows
double log_q(double x) {
    if (x < 30.0) return std::log(q_func(x));
    return -0.5 * x * x - std::log(x) - 0.5 * std::log(2.0 * M_PI);
}

}  // namespace

UpperWef enumerate_upper(const PuncturePattern& p1, int k, const WefLimits& limits,
                         TrellisEnd end) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("enumerate_upper: K must be even");
    if (limits.w_max < 1 || limits.h_max < 1 || limits.l_max < 1)
        throw std::invalid_argument("enumerate_upper: limits must be positive");
    const Trellis parity = build_trellis(cc_5_7());
    const int n_states = parity.n_states;
    const int wd = limits.w_max + 1, hd = limits.h_max + 1, ld = limits.l_max + 1;
    const size_t cells = static_cast<size_t>(n_states) * wd * hd * ld;
    std::vector<double> cur(cells, 0.0), next(cells, 0.0);
    auto at = [&](int s, int w, int h, int l) -> size_t {
        return ((static_cast<size_t>(s) * wd + w) * hd + h) * ld + l;
    };
    cur[at(0, 0, 0, 0)] = 1.0;

    for (int t = 0; t < k; ++t) {
        std::fill(next.begin(), next.end(), 0.0);
        const bool parity_in_v = (t % 2 == 0);                    // fixed P = [1 0]
        const bool parity_sent = parity_in_v && p1.kept(static_cast<size_t>(t) / 2);
        for (int s = 0; s < n_states; ++s) {
            for (int w = 0; w <= limits.w_max; ++w) {
                for (int h = 0; h <= limits.h_max; ++h) {
                    const size_t base = ((static_cast<size_t>(s) * wd + w) * hd + h) * ld;
                    for (int l = 0; l <= limits.l_max; ++l) {
                        const double c = cur[base + l];
                        if (c == 0.0) continue;
                        for (int u = 0; u < 2; ++u) {
                            const size_t e = static_cast<size_t>(s) * 2 + u;
                            const int p = parity.out_bits[e] & 1;
                            const int nw = w + u;
                            const int nh = h + u + (parity_sent ? p : 0);  // x0 keeps all info bits
                            const int nl = l + u + (parity_in_v ? p : 0);
                            if (nw > limits.w_max || nh > limits.h_max || nl > limits.l_max)
                                continue;
                            next[at(parity.next_state[e], nw, nh, nl)] += c;
                        }
                    }
                }
            }
        }
        cur.swap(next);
    }

    UpperWef wef;
    wef.limits = limits;
    wef.k = k;
    const int last_state = (end == TrellisEnd::zero_state) ? 1 : n_states;
    for (int w = 0; w <= limits.w_max; ++w)
        for (int h = 0; h <= limits.h_max; ++h)
            for (int l = 0; l <= limits.l_max; ++l) {
                double m = 0.0;
                for (int s = 0; s < last_state; ++s) m += cur[at(s, w, h, l)];
                if (m > 0.0) wef.entries.push_back({w, h, l, m});
            }
    bool has_nonzero = false;
    for (const auto& e : wef.entries)
        if (e.w > 0) has_nonzero = true;
    if (!has_nonzero)
        throw std::runtime_error("enumerate_upper: limits exclude every nonzero codeword");
    return wef;
}

LowerWef enumerate_lower(const PuncturePattern& p2, int n, const WefLimits& limits,
                         TrellisEnd end) {
    if (n < 1) throw std::invalid_argument("enumerate_lower: N must be >= 1");
    if (limits.h_max < 1 || limits.l_max < 1)
        throw std::invalid_argument("enumerate_lower: limits must be positive");
    const Trellis parity = build_trellis(cc_5_7());
    const int n_states = parity.n_states;
    const int ld = limits.l_max + 1, hd = limits.h_max + 1;
    const size_t cells = static_cast<size_t>(n_states) * ld * hd;
    std::vector<double> cur(cells, 0.0), next(cells, 0.0);
    auto at = [&](int s, int l, int h) -> size_t {
        return (static_cast<size_t>(s) * ld + l) * hd + h;
    };
    cur[at(0, 0, 0)] = 1.0;

    for (int t = 0; t < n; ++t) {
        std::fill(next.begin(), next.end(), 0.0);
        const bool sent = p2.kept(static_cast<size_t>(t));
        for (int s = 0; s < n_states; ++s) {
            for (int l = 0; l <= limits.l_max; ++l) {
                const size_t base = (static_cast<size_t>(s) * ld + l) * hd;
                for (int h = 0; h <= limits.h_max; ++h) {
                    const double c = cur[base + h];
                    if (c == 0.0) continue;
                    for (int u = 0; u < 2; ++u) {
                        const size_t e = static_cast<size_t>(s) * 2 + u;
                        const int p = parity.out_bits[e] & 1;
                        const int nl = l + u;
                        const int nh = h + (sent ? p : 0);
                        if (nl > limits.l_max || nh > limits.h_max) continue;
                        next[at(parity.next_state[e], nl, nh)] += c;
                    }
                }
            }
        }
        cur.swap(next);
    }

    LowerWef wef;
    wef.limits = limits;
    wef.n = n;
    const int last_state = (end == TrellisEnd::zero_state) ? 1 : n_states;
    for (int l = 0; l <= limits.l_max; ++l)
        for (int h = 0; h <= limits.h_max; ++h) {
            double m = 0.0;
            for (int s = 0; s < last_state; ++s) m += cur[at(s, l, h)];
            if (m > 0.0) wef.entries.push_back({l, h, m});
        }
    bool has_nonzero = false;
    for (const auto& e : wef.entries)
        if (e.l > 0) has_nonzero = true;
    if (!has_nonzero)
        throw std::runtime_error("enumerate_lower: limits exclude every nonzero codeword");
    return wef;
}

double union_bound(const UpperWef& upper, const LowerWef& lower, int k, double rate,
                   double eb_n0_db) {
    if (lower.n != 3 * k / 2)
        throw std::invalid_argument("union_bound: enumerators disagree on N = 3K/2");
    if (upper.k != k) throw std::invalid_argument("union_bound: upper enumerator built at other K");
    if (upper.limits.l_max != lower.limits.l_max)
        throw std::invalid_argument("union_bound: inconsistent l truncation");
    const int n = lower.n;
    const double snr = rate * std::pow(10.0, eb_n0_db / 10.0);

    // lower entries grouped by input weight l
    std::vector<std::vector<const LowerWef::Entry*>> by_l(static_cast<size_t>(lower.limits.l_max) + 1);
    for (const auto& e : lower.entries) by_l[static_cast<size_t>(e.l)].push_back(&e);

    std::vector<double> log_q_of_d(static_cast<size_t>(upper.limits.h_max + lower.limits.h_max) + 1);
    for (size_t d = 0; d < log_q_of_d.size(); ++d)
        log_q_of_d[d] = log_q(std::sqrt(2.0 * snr * static_cast<double>(d)));

    std::vector<double> log_binom(static_cast<size_t>(lower.limits.l_max) + 1);
    for (int l = 0; l <= lower.limits.l_max; ++l)
        log_binom[static_cast<size_t>(l)] = log_binomial(n, l);

    double pb = 0.0;
    for (const auto& ue : upper.entries) {
        if (ue.w == 0) continue;  // the all-zero codeword contributes no bit errors
        const double log_head = std::log(static_cast<double>(ue.w) / k) + std::log(ue.mult) -
                                log_binom[static_cast<size_t>(ue.l)];
        for (const auto* le : by_l[static_cast<size_t>(ue.l)]) {
            const double lt =
                log_head + std::log(le->mult) + log_q_of_d[static_cast<size_t>(ue.h_t + le->h2)];
            pb += std::exp(lt);
        }
    }
    return pb;
}

BoundCurve bound_curve(const UpperWef& upper, const LowerWef& lower, const CodeDimensions& dims,
                       const std::vector<double>& eb_n0_grid_db) {
    BoundCurve curve;
    curve.dims = dims;
    curve.k = upper.k;
    curve.limits = upper.limits;
    for (double db : eb_n0_grid_db)
        curve.points.push_back({db, union_bound(upper, lower, upper.k, dims.rate().to_double(), db)});
    return curve;
}

double ub_required_snr(const UpperWef& upper, const LowerWef& lower, int k, double rate,
                       double target_pb, double lo_db, double hi_db) {
    if (target_pb <= 0.0) throw std::invalid_argument("ub_required_snr: target must be positive");
    if (union_bound(upper, lower, k, rate, hi_db) > target_pb)
        throw std::runtime_error("ub_required_snr: target unreachable within bracket");
    if (union_bound(upper, lower, k, rate, lo_db) <= target_pb) return lo_db;
    while (hi_db - lo_db > 0.05) {
        const double mid = 0.5 * (lo_db + hi_db);
        if (union_bound(upper, lower, k, rate, mid) <= target_pb)
            hi_db = mid;
        else
            lo_db = mid;
    }
    return hi_db;
}

int choose_d2_ef(int L) {
    if (L < 200 || L > 600) throw std::domain_error("choose_d2_ef: L must be in [200, 600]");
    return d2_feasible_hi(L);
}

void write_upper_wef_csv(const std::string& path, const UpperWef& wef) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_upper_wef_csv: cannot open " + path);
    out << "w,h_t,l,mult\n";
    out.precision(17);
    for (const auto& e : wef.entries)
        out << e.w << ',' << e.h_t << ',' << e.l << ',' << e.mult << "\n";
}

void write_lower_wef_csv(const std::string& path, const LowerWef& wef) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_lower_wef_csv: cannot open " + path);
    out << "l,h2,mult\n";
    out.precision(17);
    for (const auto& e : wef.entries) out << e.l << ',' << e.h2 << ',' << e.mult << "\n";
}

void write_bound_csv(const std::string& path, const BoundCurve& curve) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_bound_csv: cannot open " + path);
    out << "eb_n0_db,pb_bound\n";
    out.precision(12);
    for (const auto& p : curve.points) out << p.eb_n0_db << ',' << p.pb_bound << "\n";
}

}  // namespace sccc
