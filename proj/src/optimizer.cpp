#include "sccc/optimizer.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "sccc/numerics.hpp"
#include "sccc/parallel.hpp"

namespace sccc {

namespace {

constexpr int kUpperNp = 100;
constexpr int kLowerNp = 300;
constexpr int kDesignK = 200;
constexpr int kDesignN = 300;

}  // namespace

PatternScore score_upper(const UpperWef& wef, double ref_snr_db) {
    if (wef.entries.empty()) throw std::invalid_argument("score_upper: empty enumerator");
    const double snr = std::pow(10.0, ref_snr_db / 10.0);
    PatternScore s;
    s.d_min = std::numeric_limits<int>::max();
    for (const auto& e : wef.entries) {
        if (e.w == 0) continue;
        s.bound_contrib += (static_cast<double>(e.w) / wef.k) * e.mult *
                           q_func(std::sqrt(2.0 * snr * e.h_t));
        if (e.h_t < s.d_min) {
            s.d_min = e.h_t;
            s.mult_at_dmin = 0.0;
        }
        if (e.h_t == s.d_min) s.mult_at_dmin += e.mult;
    }
    return s;
}

PatternScore score_lower(const LowerWef& wef, double ref_snr_db) {
    if (wef.entries.empty()) throw std::invalid_argument("score_lower: empty enumerator");
    const double snr = std::pow(10.0, ref_snr_db / 10.0);
    PatternScore s;
    s.d_min = std::numeric_limits<int>::max();
    for (const auto& e : wef.entries) {
        if (e.l == 0) continue;
        s.bound_contrib += (static_cast<double>(e.l) / wef.n) * e.mult *
                           std::exp(-log_binomial(wef.n, e.l)) *
                           q_func(std::sqrt(2.0 * snr * e.h2));
        if (e.h2 < s.d_min) {
            s.d_min = e.h2;
            s.mult_at_dmin = 0.0;
        }
        if (e.h2 == s.d_min) s.mult_at_dmin += e.mult;
    }
    return s;
}

bool score_better(const PatternScore& a, const PatternScore& b) {
    const double tol = 1e-12 * std::max(std::abs(a.bound_contrib), std::abs(b.bound_contrib));
    if (a.bound_contrib < b.bound_contrib - tol) return true;
    if (b.bound_contrib < a.bound_contrib - tol) return false;
    if (a.d_min != b.d_min) return a.d_min > b.d_min;
    return a.mult_at_dmin < b.mult_at_dmin;
}

namespace {

template <typename ScoreFn>
GreedySearchResult greedy_search(int np, const std::string& tag, const GreedyOptions& opt,
                                 ScoreFn score_candidate) {
    GreedySearchResult res;
    res.table.np = np;
    res.table.code_tag = tag;
    res.limits = opt.limits;
    res.ref_snr_db = opt.ref_snr_db;

    std::vector<char> punctured(static_cast<size_t>(np), 0);
    for (int step = 1; step <= np; ++step) {
        std::vector<int> candidates;
        for (int i = 0; i < np; ++i)
            if (!punctured[static_cast<size_t>(i)]) candidates.push_back(i);

        std::vector<PatternScore> scores(candidates.size());
        parallel_for(static_cast<int>(candidates.size()), opt.threads, [&](int ci) {
            std::vector<int> zeros = res.table.order;
            zeros.push_back(candidates[static_cast<size_t>(ci)]);
            scores[static_cast<size_t>(ci)] = score_candidate(zeros);
        });

        size_t best = 0;  // ties fall to the smaller candidate index
        for (size_t ci = 1; ci < candidates.size(); ++ci)
            if (score_better(scores[ci], scores[best])) best = ci;

        GreedyStep log_step;
        log_step.step = step;
        log_step.chosen = candidates[best];
        for (size_t ci = 0; ci < candidates.size(); ++ci)
            log_step.candidate_scores.emplace_back(candidates[ci], scores[ci].bound_contrib);
        res.steps.push_back(std::move(log_step));

        res.table.order.push_back(candidates[best]);
        punctured[static_cast<size_t>(candidates[best])] = 1;
    }
    res.table.validate();
    return res;
}

}  // namespace

GreedySearchResult greedy_lower_table(const GreedyOptions& opt) {
    return greedy_search(kLowerNp, "lower", opt, [&](const std::vector<int>& zeros) {
        const auto pattern = PuncturePattern::from_zero_indices(kLowerNp, zeros);
        return score_lower(enumerate_lower(pattern, kDesignN, opt.limits, opt.end),
                           opt.ref_snr_db);
    });
}

GreedySearchResult greedy_upper_table(const GreedyOptions& opt) {
    return greedy_search(kUpperNp, "upper", opt, [&](const std::vector<int>& zeros) {
        const auto pattern = PuncturePattern::from_zero_indices(kUpperNp, zeros);
        return score_upper(enumerate_upper(pattern, kDesignK, opt.limits, opt.end),
                           opt.ref_snr_db);
    });
}

void write_search_log(const GreedySearchResult& result, const std::string& path) {
    nlohmann::json j;
    j["code"] = result.table.code_tag;
    j["np"] = result.table.np;
    j["ref_snr_db"] = result.ref_snr_db;
    j["limits"] = {{"w_max", result.limits.w_max},
                   {"h_max", result.limits.h_max},
                   {"l_max", result.limits.l_max}};
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : result.steps) {
        nlohmann::json step;
        step["step"] = s.step;
        step["chosen"] = s.chosen;
        nlohmann::json scores = nlohmann::json::array();
        for (const auto& [idx, val] : s.candidate_scores) scores.push_back({idx, val});
        step["scores"] = std::move(scores);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_search_log: cannot open " + path);
    out << j.dump(1) << "\n";
}

}  // namespace sccc
