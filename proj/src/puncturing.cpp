#include "sccc/puncturing.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace sccc {

int PuncturePattern::ones() const {
    int c = 0;
    for (uint8_t b : keep) c += b;
    return c;
}

size_t PuncturePattern::kept_count(size_t frame_len) const {
    const size_t np_ = keep.size();
    const size_t full = frame_len / np_;
    size_t c = full * static_cast<size_t>(ones());
    for (size_t i = full * np_; i < frame_len; ++i)
        if (keep[i % np_]) ++c;
    return c;
}

PuncturePattern PuncturePattern::all_ones(int np) {
    if (np < 1) throw std::invalid_argument("PuncturePattern: np must be >= 1");
    return PuncturePattern{BitVec(static_cast<size_t>(np), 1)};
}

PuncturePattern PuncturePattern::from_zero_indices(int np, const std::vector<int>& zeros) {
    PuncturePattern p = all_ones(np);
    for (int z : zeros) {
        if (z < 0 || z >= np) throw std::invalid_argument("PuncturePattern: zero index out of range");
        p.keep[static_cast<size_t>(z)] = 0;
    }
    return p;
}

std::vector<int> PuncturePattern::zero_indices() const {
    std::vector<int> z;
    for (size_t i = 0; i < keep.size(); ++i)
        if (!keep[i]) z.push_back(static_cast<int>(i));
    return z;
}

LlrFrame depuncture(const PuncturePattern& p, const LlrFrame& punctured, size_t full_len) {
    if (p.kept_count(full_len) != punctured.size())
        throw std::invalid_argument("depuncture: punctured length inconsistent with pattern");
    LlrFrame out(full_len, 0.0);
    size_t j = 0;
    for (size_t i = 0; i < full_len; ++i)
        if (p.kept(i)) out[i] = punctured[j++];
    return out;
}

void RateCompatibleTable::validate() const {
    if (np < 1) throw std::invalid_argument("RateCompatibleTable: np must be >= 1");
    if (order.size() > static_cast<size_t>(np))
        throw std::invalid_argument("RateCompatibleTable: order longer than np");
    std::vector<char> seen(static_cast<size_t>(np), 0);
    for (int idx : order) {
        if (idx < 0 || idx >= np) throw std::invalid_argument("RateCompatibleTable: index out of range");
        if (seen[static_cast<size_t>(idx)]) throw std::invalid_argument("RateCompatibleTable: duplicate index");
        seen[static_cast<size_t>(idx)] = 1;
    }
}

PuncturePattern RateCompatibleTable::pattern_at(int n_punctured) const {
    if (n_punctured < 0 || n_punctured > static_cast<int>(order.size()))
        throw std::invalid_argument("pattern_at: n_punctured out of range");
    std::vector<int> zeros(order.begin(), order.begin() + n_punctured);
    return PuncturePattern::from_zero_indices(np, zeros);
}

void write_table(const RateCompatibleTable& table, const std::string& path) {
    table.validate();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_table: cannot open " + path);
    out << "# np=" << table.np << " code=" << table.code_tag << "\n";
    for (int idx : table.order) out << idx << "\n";
}

RateCompatibleTable read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_table: cannot open " + path);
    std::string header;
    std::getline(in, header);
    RateCompatibleTable t;
    if (std::sscanf(header.c_str(), "# np=%d", &t.np) != 1)
        throw std::runtime_error("read_table: bad header in " + path);
    const auto code_pos = header.find("code=");
    if (code_pos == std::string::npos) throw std::runtime_error("read_table: bad header in " + path);
    t.code_tag = header.substr(code_pos + 5);
    int idx;
    while (in >> idx) t.order.push_back(idx);
    t.validate();
    return t;
}

double rate_from_permeabilities(double rho0, double rho1, double rho2) {
    for (double r : {rho0, rho1, rho2})
        if (r < 0.0 || r > 1.0) throw std::invalid_argument("rate: permeabilities must be in [0,1]");
    const double denom = rho0 + 0.5 * rho1 + 1.5 * rho2;
    if (denom == 0.0) throw std::domain_error("rate: all-zero permeabilities, rate undefined");
    return 1.0 / denom;
}

Rational rate_from_counts(int d0, int d1, int d2) {
    if (d0 < 0 || d0 > 200 || d1 < 0 || d1 > 100 || d2 < 0 || d2 > 300)
        throw std::invalid_argument("rate: counts out of range");
    const int L = d0 + d1 + d2;
    if (L == 0) throw std::domain_error("rate: all-zero permeabilities, rate undefined");
    return Rational(200, L);
}

int d2_feasible_lo(int L) { return std::max(0, L - 300); }
int d2_feasible_hi(int L) { return std::min(300, L - 200); }

namespace {

void check_length(int L) {
    if (L < 200 || L > 600)
        throw std::domain_error("dimensions: L must be in [200, 600] (1/3 <= R <= 1)");
}

}  // namespace

CodeDimensions dimensions_for_length(int L, int d2, int k) {
    check_length(L);
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("dimensions: K must be even and >= 2");
    const int lo = d2_feasible_lo(L), hi = d2_feasible_hi(L);
    if (d2 < lo || d2 > hi) {
        std::ostringstream msg;
        msg << "dimensions: d2=" << d2 << " infeasible at L=" << L << "; feasible d2 in [" << lo
            << ", " << hi << "]";
        throw std::domain_error(msg.str());
    }
    CodeDimensions dims;
    dims.d0 = 200;
    dims.d1 = L - 200 - d2;
    dims.d2 = d2;
    dims.k = k;
    return dims;
}

CodeDimensions dimensions_for_rate(const Rational& rate, int d2, int k) {
    if (rate.num <= 0) throw std::invalid_argument("dimensions: rate must be positive");
    const long long num = 200 * rate.den;
    if (num % rate.num != 0)
        throw std::domain_error("dimensions: 200/R is not an integer; use nearest_length_for_rate");
    return dimensions_for_length(static_cast<int>(num / rate.num), d2, k);
}

int nearest_length_for_rate(const Rational& rate) {
    if (rate.num <= 0) throw std::invalid_argument("nearest_length_for_rate: rate must be positive");
    const double exact = 200.0 * static_cast<double>(rate.den) / static_cast<double>(rate.num);
    const int L = static_cast<int>(std::lround(exact));
    check_length(L);
    return L;
}

namespace {

int clamp_feasible(int d2, int L) {
    return std::clamp(d2, d2_feasible_lo(L), d2_feasible_hi(L));
}

}  // namespace

int d2_compromise(int L) {
    check_length(L);
    const int num = 3 * L - 600;
    int d2;
    if (num % 4 == 0) {
        d2 = num / 4;
    } else {
        d2 = num / 4 + 1;      // round up...
        if (d2 % 2 != 0) ++d2; // ...to the next even integer
    }
    return clamp_feasible(d2, L);
}

int d2_wf_line(int L) {
    check_length(L);
    const int d2 = (L - 200 + 1) / 2;  // d2 = d1, rounded up when L-200 is odd
    return clamp_feasible(d2, L);
}

Rational parse_rate(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const long long num = std::stoll(text.substr(0, slash));
        const long long den = std::stoll(text.substr(slash + 1));
        return Rational(num, den);
    }
    const double v = std::stod(text);
    if (v <= 0.0 || v > 1.0) throw std::invalid_argument("parse_rate: rate must be in (0, 1]");
    // decimal input: snap to a fraction over 10^6
    return Rational(static_cast<long long>(std::lround(v * 1e6)), 1000000);
}

}  // namespace sccc
