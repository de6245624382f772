#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sccc/convcode.hpp"

namespace sccc {

// Exact rate bookkeeping. Rates are ratios of small integers throughout the
// family (R = 200/L at the design block length), so they are kept as reduced
// fractions rather than doubles.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// Periodic keep/drop mask. Applied to a frame of any length M by tiling:
// position i is kept iff keep[i mod Np] == 1; a trailing partial period is
// masked the same way.
struct PuncturePattern {
    BitVec keep;

    int np() const { return static_cast<int>(keep.size()); }
    bool kept(size_t i) const { return keep[i % keep.size()] != 0; }
    int ones() const;                       // kept positions per period
    size_t kept_count(size_t frame_len) const;

    static PuncturePattern all_ones(int np);
    static PuncturePattern from_zero_indices(int np, const std::vector<int>& zeros);
    std::vector<int> zero_indices() const;
};

// keeps exactly the kept positions, in order
template <typename T>
std::vector<T> apply_pattern(const PuncturePattern& p, const std::vector<T>& frame) {
    std::vector<T> out;
    out.reserve(frame.size());
    for (size_t i = 0; i < frame.size(); ++i)
        if (p.kept(i)) out.push_back(frame[i]);
    return out;
}

// inserts LLR 0 at punctured positions; inverse of apply_pattern on the
// kept positions
LlrFrame depuncture(const PuncturePattern& p, const LlrFrame& punctured, size_t full_len);

// Ordered puncturing-index table. pattern_at(k) punctures the first k entries
// of `order`; prefixes therefore yield nested keep-sets (rate compatibility).
struct RateCompatibleTable {
    int np = 0;
    std::vector<int> order;   // a permutation (prefix) of 0..np-1
    std::string code_tag;     // "upper" or "lower"

    void validate() const;
    PuncturePattern pattern_at(int n_punctured) const;
};

void write_table(const RateCompatibleTable& table, const std::string& path);
RateCompatibleTable read_table(const std::string& path);

// The family's D = [d0, d1, d2] parameterization at the 200-info-bit
// normalization: d0 = 200*rho0, d1 = 100*rho1, d2 = 300*rho2 count the
// transmitted bits of x0, x1, x2 per 200 information bits, with d0 fixed at
// 200 (systematic bits are never punctured) and L = d0 + d1 + d2 = 200/R.
struct CodeDimensions {
    int d0 = 200;
    int d1 = 0;
    int d2 = 0;
    int k = 200;  // information bits per frame; even, so N = 3K/2 is whole

    int pattern_period_total() const { return d0 + d1 + d2; }
    int n() const { return 3 * k / 2; }
    Rational rate() const { return Rational(200, pattern_period_total()); }
    double rho0() const { return d0 / 200.0; }
    double rho1() const { return d1 / 100.0; }
    double rho2() const { return d2 / 300.0; }
};

// Overall rate from the permeabilities: R = 1/(rho0 + rho1/2 + 3 rho2/2).
double rate_from_permeabilities(double rho0, double rho1, double rho2);
// Same thing in exact integers at the 200-normalization.
Rational rate_from_counts(int d0, int d1, int d2);

// Feasible d2 interval at total period length L: d1 = L - 200 - d2 must lie
// in [0, 100] and d2 in [0, 300].
int d2_feasible_lo(int L);
int d2_feasible_hi(int L);

// Builds dimensions from the total transmitted count per 200 info bits.
// Throws std::domain_error (reporting the feasible interval) when infeasible.
CodeDimensions dimensions_for_length(int L, int d2, int k = 200);
// Rate form; L = 200/R must be an integer (use nearest_length otherwise).
CodeDimensions dimensions_for_rate(const Rational& rate, int d2, int k = 200);
// Nearest realizable period length for an arbitrary target rate.
int nearest_length_for_rate(const Rational& rate);

// d2 strategies over the rate family (per-200 normalization):
//   compromise: d2 = (3L - 600)/4, rounded up to the next even integer when
//               fractional, then clamped to the feasible interval;
//   wf line:    d2 = d1 while possible, i.e. (L - 200)/2 rounded up,
//               clamped to the feasible interval.
int d2_compromise(int L);
int d2_wf_line(int L);

Rational parse_rate(const std::string& text);  // "1/2", "2/3", "0.75"

}  // namespace sccc
