#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sccc/channel.hpp"
#include "sccc/numerics.hpp"
#include "sccc/rng.hpp"
#include "test_util.hpp"

using namespace sccc;

TEST_CASE("noise variance follows sigma2 = 1/(2 R Eb/N0)") {
    const auto p = ChannelParams::from_ebn0(3.0, 5.0 / 6.0);
    CHECK(p.sigma2 == doctest::Approx(0.300712).epsilon(1e-4));
    CHECK(ChannelParams::from_ebn0(0.0, 0.5).sigma2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("noiseless transmit returns the antipodal symbols exactly") {
    ChannelParams p{0.0, 1.0, 0.0};
    const auto y = transmit(BitVec{0, 1, 1, 0}, p, 5);
    CHECK(y == std::vector<double>{1.0, -1.0, -1.0, 1.0});
}

TEST_CASE("sample variance matches sigma2 within 1% at 1e6 samples") {
    ChannelParams p{0.0, 1.0, 0.5};
    const auto y = transmit(BitVec(1'000'000, 0), p, 11);
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    double var = 0.0;
    for (double v : y) var += (v - mean) * (v - mean);
    var /= static_cast<double>(y.size() - 1);
    CHECK(var == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("transmit is reproducible per seed") {
    ChannelParams p{2.0, 0.5, 0.0};
    p = ChannelParams::from_ebn0(2.0, 0.5);
    const auto a = transmit(BitVec(64, 0), p, 99);
    const auto b = transmit(BitVec(64, 0), p, 99);
    CHECK(a == b);
}

TEST_CASE("channel llrs: formula, clamp, symmetry") {
    CHECK(channel_llrs({0.0}, 0.5)[0] == 0.0);
    CHECK(channel_llrs({1.0}, 0.5)[0] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(channel_llrs({100.0}, 0.5)[0] == kLlrClamp);
    CHECK_THROWS_AS(channel_llrs({1.0}, 0.0), std::invalid_argument);

    Rng rng(3);
    std::vector<double> y(100);
    for (auto& v : y) v = 4.0 * (rng.next_double() - 0.5);
    std::vector<double> neg(y);
    for (auto& v : neg) v = -v;
    const auto a = channel_llrs(y, 0.7);
    const auto b = channel_llrs(neg, 0.7);
    for (size_t i = 0; i < y.size(); ++i) CHECK(a[i] == -b[i]);
    for (size_t i = 1; i < y.size(); ++i)
        if (y[i] > y[i - 1]) CHECK(a[i] >= a[i - 1]);
}

TEST_CASE("hard-decision ber matches the closed-form Q at 4 dB uncoded") {
    const auto p = ChannelParams::from_ebn0(4.0, 1.0);
    Rng rng(23);
    const long n = 2'000'000;
    const auto bits = testutil::random_bits(n, rng);
    const auto y = transmit(bits, p, 31);
    long errs = 0;
    for (long i = 0; i < n; ++i)
        if ((y[static_cast<size_t>(i)] < 0 ? 1 : 0) != bits[static_cast<size_t>(i)]) ++errs;
    const double ber = static_cast<double>(errs) / n;
    const double q = q_func(std::sqrt(2.0 * std::pow(10.0, 0.4)));
    const double sigma = std::sqrt(q * (1 - q) / n);
    CHECK(std::abs(ber - q) <= 3.0 * sigma);
}

TEST_CASE("bpsk capacity anchors") {
    // R -> 0 approaches the ln 2 Shannon limit
    CHECK(bpsk_ebn0_limit_db(0.001) == doctest::Approx(-1.5917).epsilon(0.02));
    // BPSK-constrained limit at R = 1/2 (frozen from quadrature, checked by MC below)
    CHECK(bpsk_ebn0_limit_db(0.5) == doctest::Approx(0.187).epsilon(0.05));
    CHECK(bpsk_capacity_gap_db(0.5, bpsk_ebn0_limit_db(0.5)) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK_THROWS_AS(bpsk_ebn0_limit_db(1.0), std::invalid_argument);
}

TEST_CASE("capacity quadrature agrees with Monte Carlo integration") {
    const double sigma2 = ChannelParams::from_ebn0(0.187, 0.5).sigma2;
    Rng rng(41);
    double acc = 0.0;
    const long n = 2'000'000;
    const double scale = 2.0 / sigma2;
    for (long i = 0; i < n; ++i) {
        const double y = 1.0 + std::sqrt(sigma2) * rng.next_gaussian();
        acc += log2_one_plus_exp(-scale * y);
    }
    const double mc = 1.0 - acc / static_cast<double>(n);
    CHECK(bpsk_capacity(sigma2) == doctest::Approx(mc).epsilon(2e-3));
    CHECK(bpsk_capacity(sigma2) == doctest::Approx(0.5).epsilon(2e-3));
}

TEST_CASE("capacity is strictly increasing in Eb/N0") {
    double prev = 0.0;
    for (double db = -2.0; db <= 8.0; db += 0.5) {
        const double c = bpsk_capacity(ChannelParams::from_ebn0(db, 0.5).sigma2);
        CHECK(c > prev);
        prev = c;
    }
}
