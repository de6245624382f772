#pragma once

#include <string>
#include <vector>

#include "sccc/convcode.hpp"
#include "sccc/puncturing.hpp"

namespace sccc {

// Truncation limits for the trellis enumeration, chosen at the K = 200 scale.
// Error-floor bounds are dominated by the low-weight terms; convergence is
// checked by re-running with h_max + 10.
struct WefLimits {
    int w_max = 8;
    int h_max = 40;
    int l_max = 40;
};

// End-of-frame convention for the enumeration. any_state matches the
// truncated (unterminated) codec exactly, so the union bound is a true upper
// bound for it, but the count then includes frame-edge events (paths that
// diverge near the end and pay almost no weight) which dominate the floor at
// moderate K. zero_state counts only paths returning to state zero, the
// classical convention behind published floor analyses; use it for
// error-floor curves and pattern scoring.
enum class TrellisEnd { any_state, zero_state };

// Weight enumerator of the upper code: multiplicity of input sequences with
// information weight w, transmitted weight h_t over (x0, x1), and weight l of
// the interleaver input v. Multiplicities are exact integers stored in
// doubles (exact below 2^53).
struct UpperWef {
    struct Entry {
        int w, h_t, l;
        double mult;
    };
    std::vector<Entry> entries;  // sorted by (w, h_t, l); includes (0,0,0) -> 1
    WefLimits limits;
    int k = 0;
};

// IOWEF of the lower code: input weight l over z against transmitted weight
// h2 of x2.
struct LowerWef {
    struct Entry {
        int l, h2;
        double mult;
    };
    std::vector<Entry> entries;  // sorted by (l, h2); includes (0,0) -> 1
    WefLimits limits;
    int n = 0;
};

// Dynamic programming over the trellis stages, branches pruned once any
// weight exceeds its limit. Throws std::runtime_error when the limits exclude
// every nonzero codeword.
UpperWef enumerate_upper(const PuncturePattern& p1, int k, const WefLimits& limits,
                         TrellisEnd end = TrellisEnd::any_state);
LowerWef enumerate_lower(const PuncturePattern& p2, int n, const WefLimits& limits,
                         TrellisEnd end = TrellisEnd::any_state);

// Uniform-interleaver union bound on the bit error probability:
//   Pb <= sum (w/K) A^U_{w,h_t,l} A^L_{l,h2} / C(N,l) Q(sqrt(2 R (h_t+h2) Eb/N0))
// with N = 3K/2. Assembled in log space so huge multiplicities and tiny
// pairwise error probabilities do not overflow.
double union_bound(const UpperWef& upper, const LowerWef& lower, int k, double rate,
                   double eb_n0_db);

struct BoundCurve {
    struct Point {
        double eb_n0_db, pb_bound;
    };
    std::vector<Point> points;
    CodeDimensions dims;
    int k = 0;
    WefLimits limits;
};

BoundCurve bound_curve(const UpperWef& upper, const LowerWef& lower, const CodeDimensions& dims,
                       const std::vector<double>& eb_n0_grid_db);

// Bisection on union_bound to 0.05 dB within [lo_db, hi_db]; throws
// std::runtime_error when the target is unreachable inside the bracket.
double ub_required_snr(const UpperWef& upper, const LowerWef& lower, int k, double rate,
                       double target_pb, double lo_db = 0.0, double hi_db = 14.0);

// Error-floor strategy: maximize d2, i.e. d2 = min(300, L - 200).
int choose_d2_ef(int L);

void write_upper_wef_csv(const std::string& path, const UpperWef& wef);
void write_lower_wef_csv(const std::string& path, const LowerWef& wef);
void write_bound_csv(const std::string& path, const BoundCurve& curve);

}  // namespace sccc
