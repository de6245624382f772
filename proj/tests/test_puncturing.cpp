#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sccc/puncturing.hpp"
#include "sccc/rng.hpp"

using namespace sccc;

TEST_CASE("rate formula anchor values") {
    CHECK(rate_from_permeabilities(1.0, 20.0 / 100, 20.0 / 300) ==
          doctest::Approx(5.0 / 6.0).epsilon(1e-12));
    CHECK(rate_from_permeabilities(1.0, 1.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(rate_from_permeabilities(1.0, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(rate_from_permeabilities(0.0, 0.0, 0.0), std::domain_error);
    CHECK(rate_from_counts(200, 20, 20) == Rational(5, 6));
}

TEST_CASE("rate round-trips exactly over the whole feasible grid") {
    int cases = 0;
    for (int d1 = 0; d1 <= 100; ++d1) {
        for (int d2 = 0; d2 <= 300; ++d2) {
            const int L = 200 + d1 + d2;
            const CodeDimensions dims = dimensions_for_length(L, d2, 200);
            CHECK(dims.d1 == d1);
            const Rational r = rate_from_counts(dims.d0, dims.d1, dims.d2);
            CHECK(r == Rational(200, L));
            // and back: L from the exact rate
            CHECK(200 * r.den / r.num == L);
            ++cases;
        }
    }
    CHECK(cases == 30401);
}

TEST_CASE("compromise line values and endpoints") {
    CHECK(d2_compromise(400) == 150);
    CHECK(d2_compromise(300) == 75);
    CHECK(d2_compromise(600) == 300);
    CHECK(d2_compromise(200) == 0);
    CHECK_THROWS_AS(d2_compromise(199), std::domain_error);
    CHECK_THROWS_AS(d2_compromise(601), std::domain_error);
    // fractional case rounds up to the next even integer, then clamps
    CHECK(d2_compromise(201) == 1);  // (3*201-600)/4 = 0.75 -> 2, clamped to hi = 1
}

TEST_CASE("wf line: d2 = d1 while feasible") {
    CHECK(d2_wf_line(400) == 100);
    CHECK(d2_wf_line(300) == 50);
    CHECK(d2_wf_line(240) == 20);
    CHECK(d2_wf_line(500) == 200);  // d1 capped at 100
    CHECK(d2_wf_line(600) == 300);
}

TEST_CASE("apply/depuncture on the fixed paper patterns") {
    PuncturePattern pa;
    pa.keep = {1, 1, 1, 0};
    const std::vector<int> frame{1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(apply_pattern(pa, frame) == std::vector<int>{1, 2, 3, 5, 6, 7});

    PuncturePattern p;
    p.keep = {1, 0};
    const LlrFrame llrs{10, 20, 30, 40};
    const LlrFrame kept = apply_pattern(p, llrs);
    CHECK(kept == LlrFrame{10, 30});
    CHECK(depuncture(p, kept, 4) == LlrFrame{10, 0, 30, 0});

    const auto ones = PuncturePattern::all_ones(4);
    CHECK(apply_pattern(ones, llrs) == llrs);
    CHECK(depuncture(ones, llrs, 4) == llrs);
}

TEST_CASE("depuncture of apply preserves kept values on random patterns") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const int np = 2 + static_cast<int>(rng.next_below(12));
        PuncturePattern p;
        p.keep.resize(static_cast<size_t>(np));
        for (auto& b : p.keep) b = static_cast<uint8_t>(rng.next_bit());
        const size_t len = 1 + rng.next_below(100);  // tiling with partial period
        LlrFrame frame(len);
        for (auto& v : frame) v = rng.next_double() - 0.5;
        const auto restored = depuncture(p, apply_pattern(p, frame), len);
        for (size_t i = 0; i < len; ++i)
            CHECK(restored[i] == (p.kept(i) ? frame[i] : 0.0));
    }
}

TEST_CASE("pattern_at produces nested keep-sets") {
    RateCompatibleTable t;
    t.np = 4;
    t.order = {3, 1, 0, 2};
    t.code_tag = "lower";
    CHECK(t.pattern_at(0).keep == BitVec{1, 1, 1, 1});
    CHECK(t.pattern_at(1).keep == BitVec{1, 1, 1, 0});
    for (int n = 0; n + 1 <= 4; ++n) {
        const auto a = t.pattern_at(n), b = t.pattern_at(n + 1);
        for (int i = 0; i < 4; ++i)
            if (b.keep[static_cast<size_t>(i)]) CHECK(a.keep[static_cast<size_t>(i)]);
    }
    CHECK_THROWS_AS(t.pattern_at(5), std::invalid_argument);
}

TEST_CASE("zero-index representation round-trips") {
    PuncturePattern pa;
    pa.keep = {1, 1, 1, 0};
    CHECK(pa.zero_indices() == std::vector<int>{3});
    CHECK(PuncturePattern::from_zero_indices(4, {3}).keep == pa.keep);
}

TEST_CASE("dimensions_for reports the feasible interval on infeasible input") {
    CHECK(dimensions_for_length(400, 200, 200).d1 == 0);
    CHECK(dimensions_for_length(240, 20, 200).d2 == 20);
    CHECK(dimensions_for_length(600, 300).d1 == 100);
    try {
        dimensions_for_length(400, 99);
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("[100, 200]") != std::string::npos);
    }
    CHECK_THROWS_AS(dimensions_for_rate(Rational(9, 10), 11), std::domain_error);
    CHECK(nearest_length_for_rate(Rational(9, 10)) == 222);
    CHECK(dimensions_for_rate(Rational(1, 2), 150).d1 == 50);
}

TEST_CASE("table file format round-trips byte-exactly") {
    RateCompatibleTable t;
    t.np = 7;
    t.order = {3, 0, 6, 2, 5, 1, 4};
    t.code_tag = "upper";
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = (dir / "sccc_test_table.txt").string();
    write_table(t, path);
    const auto t2 = read_table(path);
    CHECK(t2.np == t.np);
    CHECK(t2.order == t.order);
    CHECK(t2.code_tag == t.code_tag);
    const auto path2 = (dir / "sccc_test_table2.txt").string();
    write_table(t2, path2);
    std::ifstream a(path), b(path2);
    const std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    const std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
    std::filesystem::remove(path);
    std::filesystem::remove(path2);
}

TEST_CASE("parse_rate accepts fractions and decimals") {
    CHECK(parse_rate("1/2") == Rational(1, 2));
    CHECK(parse_rate("20/21") == Rational(20, 21));
    CHECK(parse_rate("0.5") == Rational(1, 2));
}
