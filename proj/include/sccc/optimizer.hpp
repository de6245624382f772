#pragma once

#include <string>
#include <vector>

#include "sccc/puncturing.hpp"
#include "sccc/wef.hpp"

namespace sccc {

// Scalar quality of a punctured constituent: the single-code union-bound
// contribution at a reference SNR, with information-weight weighting
//   upper: sum (w/K)   A_{w,h_t} Q(sqrt(2 h_t snr))
//   lower: sum (l/N)   A_{l,h2} / C(N,l) Q(sqrt(2 h2 snr))
// plus the minimum transmitted weight and its multiplicity for tie-breaking.
struct PatternScore {
    double bound_contrib = 0.0;
    int d_min = 0;
    double mult_at_dmin = 0.0;
};

PatternScore score_upper(const UpperWef& wef, double ref_snr_db);
PatternScore score_lower(const LowerWef& wef, double ref_snr_db);

// a beats b: smaller bound contribution; ties resolved by larger d_min, then
// smaller multiplicity at d_min (the caller breaks remaining ties by index)
bool score_better(const PatternScore& a, const PatternScore& b);

struct GreedyStep {
    int step = 0;             // 1-based; number of punctured bits after this step
    int chosen = -1;          // index appended to the table
    std::vector<std::pair<int, double>> candidate_scores;  // (index, bound_contrib)
};

struct GreedySearchResult {
    RateCompatibleTable table;
    std::vector<GreedyStep> steps;
    WefLimits limits;
    double ref_snr_db = 0.0;
};

struct GreedyOptions {
    WefLimits limits{6, 24, 24};  // search-time limits; audits re-run at full limits
    double ref_snr_db = 4.0;
    int threads = 0;
    // zero_state keeps frame-edge truncation events out of the scores; they
    // carry no pattern information and would otherwise dominate the search
    TrellisEnd end = TrellisEnd::zero_state;
};

// Incremental pattern-order search: with previously chosen indices fixed,
// score every remaining candidate and append the best, until the table holds
// a full permutation (300 indices for the lower code, 100 for the upper).
// Deterministic for fixed options.
GreedySearchResult greedy_lower_table(const GreedyOptions& opt = {});
GreedySearchResult greedy_upper_table(const GreedyOptions& opt = {});

// JSON search log (per-step candidate scores) for the audit tests.
void write_search_log(const GreedySearchResult& result, const std::string& path);

}  // namespace sccc
