#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "sccc/interleaving.hpp"
#include "sccc/rng.hpp"

using namespace sccc;

TEST_CASE("n=1 random interleaver is the identity") {
    const auto ilv = make_random_interleaver(1, 42);
    CHECK(ilv.perm == std::vector<int>{0});
}

TEST_CASE("same (n, seed) reproduces the same permutation") {
    const auto a = make_random_interleaver(300, 7);
    const auto b = make_random_interleaver(300, 7);
    CHECK(a.perm == b.perm);
    const auto c = make_random_interleaver(300, 8);
    CHECK(a.perm != c.perm);
}

TEST_CASE("fixed-point count of uniform permutations is Poisson(1)") {
    const int n_seeds = 1000;
    long long fixed = 0;
    for (int s = 0; s < n_seeds; ++s) {
        const auto ilv = make_random_interleaver(300, 1000 + static_cast<uint64_t>(s));
        for (int i = 0; i < 300; ++i)
            if (ilv.perm[static_cast<size_t>(i)] == i) ++fixed;
    }
    const double mean = static_cast<double>(fixed) / n_seeds;
    CHECK(std::abs(mean - 1.0) <= 3.0 * std::sqrt(1.0 / n_seeds));
}

TEST_CASE("s-random constraint verified exhaustively") {
    const int n = 300, s = 12;
    const auto ilv = make_s_random_interleaver(n, s, 9);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n && j - i <= s; ++j)
            CHECK(std::abs(ilv.perm[static_cast<size_t>(i)] - ilv.perm[static_cast<size_t>(j)]) > s);
}

TEST_CASE("s = 0 succeeds immediately, impossible s fails") {
    CHECK(make_s_random_interleaver(50, 0, 3).size() == 50);
    CHECK_THROWS_AS(make_s_random_interleaver(20, 20, 3, 5), std::runtime_error);
}

TEST_CASE("permute round-trips and preserves the multiset") {
    Rng rng(13);
    const auto ilv = make_random_interleaver(300, 21);
    std::vector<double> frame(300);
    for (auto& v : frame) v = rng.next_double();
    const auto z = permute(ilv, frame);
    CHECK(inverse_permute(ilv, z) == frame);
    auto a = frame, b = z;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);

    const auto id = make_identity_interleaver(300);
    CHECK(permute(id, frame) == frame);
    CHECK_THROWS_AS(permute(ilv, std::vector<double>(299)), std::invalid_argument);
}

TEST_CASE("interleaver file export round-trips") {
    const auto ilv = make_s_random_interleaver(120, 7, 5);
    const auto path = (std::filesystem::temp_directory_path() / "sccc_test_ilv.txt").string();
    write_interleaver(ilv, path);
    const auto back = read_interleaver(path);
    CHECK(back.perm == ilv.perm);
    CHECK(back.kind == ilv.kind);
    CHECK(back.s_value == ilv.s_value);
    CHECK(back.seed == ilv.seed);
    std::filesystem::remove(path);
}
