#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "ldseds/point_set.hpp"
#include "ldseds/rng.hpp"

using namespace ldseds;

TEST_CASE("radical inverse hand values") {
    CHECK(radical_inverse(0, 2) == 0.0);
    CHECK(radical_inverse(3, 2) == 0.75);  // 11 in base 2 mirrored
    CHECK(radical_inverse(5, 3) == doctest::Approx(7.0 / 9.0).epsilon(1e-15));
    CHECK_THROWS_AS(radical_inverse(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(radical_inverse(3, 0), std::invalid_argument);
}

TEST_CASE("radical inverse with identity permutation is unscrambled") {
    const std::vector<std::uint32_t> identity = {0, 1, 2, 3, 4};
    for (std::uint64_t i = 0; i < 200; ++i)
        CHECK(radical_inverse(i, 5, identity) == radical_inverse(i, 5));
    const std::vector<std::uint32_t> bad = {1, 0};  // does not fix 0
    CHECK_THROWS_AS(radical_inverse(3, 2, bad), std::invalid_argument);
}

TEST_CASE("digit permutation fixes zero and is a bijection") {
    for (std::uint32_t base : {2u, 3u, 7u, 97u}) {
        const auto perm = digit_permutation(base, 1234);
        REQUIRE(perm.size() == base);
        CHECK(perm[0] == 0);
        std::set<std::uint32_t> seen(perm.begin(), perm.end());
        CHECK(seen.size() == base);
        CHECK(perm == digit_permutation(base, 1234));
    }
}

TEST_CASE("prime table starts as expected and ends at the 2000th prime") {
    const auto primes = prime_table();
    REQUIRE(primes.size() == 2000);
    CHECK(primes[0] == 2);
    CHECK(primes[1] == 3);
    CHECK(primes[5] == 13);
    CHECK(primes[1999] == 17389);
}

TEST_CASE("halton matches the hand-derived first rows") {
    const auto ps = generate_halton(3, 2);
    CHECK(ps.points(0, 0) == 0.5);
    CHECK(ps.points(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(ps.points(1, 0) == 0.25);
    CHECK(ps.points(1, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(ps.points(2, 0) == 0.75);
    CHECK(ps.points(2, 1) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(ps.start_index == 1);  // skips the all-zeros point by default
}

TEST_CASE("halton rows equal per-base radical inverses") {
    const auto ps = generate_halton(20, 5);
    for (std::size_t i = 0; i < 20; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(ps.points(i, j) == radical_inverse(1 + i, prime_table()[j]));
}

TEST_CASE("scrambled halton rows equal permuted radical inverses") {
    const std::uint64_t seed = 99;
    const auto ps = generate_halton(16, 4, seed);
    CHECK(ps.generator_id == Generator::ScrambledHalton);
    for (std::size_t j = 0; j < 4; ++j) {
        const auto perm = digit_permutation(prime_table()[j], seed);
        for (std::size_t i = 0; i < 16; ++i)
            CHECK(ps.points(i, j) == radical_inverse(1 + i, prime_table()[j], perm));
    }
    // Scrambling must actually move something.
    const auto plain = generate_halton(16, 4);
    bool differs = false;
    for (std::size_t i = 0; i < ps.points.data.size(); ++i)
        differs |= ps.points.data[i] != plain.points.data[i];
    CHECK(differs);
}

TEST_CASE("generators are deterministic and stay inside the unit cube") {
    SplitMix64 pick(7);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 1 + pick.next_below(40);
        const std::size_t d = 1 + pick.next_below(12);
        const std::uint64_t seed = pick.next();
        for (Generator g : {Generator::Halton, Generator::ScrambledHalton, Generator::Sobol,
                            Generator::HuaWang, Generator::Uniform}) {
            const auto a = generate_point_set(g, n, d, seed, default_start_index(g));
            const auto b = generate_point_set(g, n, d, seed, default_start_index(g));
            CHECK(a.points.data == b.points.data);
            for (double v : a.points.data) {
                CHECK(v >= 0.0);
                CHECK(v < 1.0);
            }
        }
    }
}

TEST_CASE("halton rejects dimensions past the prime table") {
    CHECK_THROWS_WITH_AS(generate_halton(4, 2001),
                         doctest::Contains("2000"), std::invalid_argument);
}

TEST_CASE("sobol dimension 1 is the base-2 van der Corput sequence") {
    const auto ps = generate_sobol(3, 1, 1);
    CHECK(ps.points(0, 0) == 0.5);
    CHECK(ps.points(1, 0) == 0.25);
    CHECK(ps.points(2, 0) == 0.75);
    const auto more = generate_sobol(512, 1, 0);
    for (std::size_t i = 0; i < 512; ++i)
        CHECK(more.points(i, 0) == radical_inverse(i, 2));
}

TEST_CASE("sobol index 0 is the all-zeros point") {
    const auto ps = generate_sobol(1, 8, 0);
    for (std::size_t j = 0; j < 8; ++j) CHECK(ps.points(0, j) == 0.0);
}

TEST_CASE("sobol one point per dyadic interval, any start") {
    // Binary (0,1)-sequence in dimension 1: 2^k consecutive indices occupy
    // 2^k distinct intervals.
    for (std::uint64_t start : {0ull, 1ull, 7ull, 100ull}) {
        for (int k = 3; k <= 7; ++k) {
            const std::size_t n = 1u << k;
            const auto ps = generate_sobol(n, 1, start);
            std::vector<int> bins(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                ++bins[static_cast<std::size_t>(ps.points(i, 0) * n)];
            for (int b : bins) CHECK(b == 1);
        }
    }
}

TEST_CASE("sobol matches an independent published-sequence oracle") {
    // Frozen values from a reference digital Sobol implementation (natural
    // index order).
    const auto ps = generate_sobol(1024, 10, 0);
    const double j5[] = {0.625, 0.125, 0.875, 0.625, 0.625, 0.875, 0.125, 0.125, 0.125, 0.375};
    const double j100[] = {0.1484375, 0.7734375, 0.6953125, 0.9609375, 0.5234375,
                           0.0703125, 0.0390625, 0.5859375, 0.1171875, 0.9921875};
    const double j777[] = {0.5654296875, 0.1884765625, 0.8916015625, 0.1787109375,
                           0.2705078125, 0.1279296875, 0.8017578125, 0.2216796875,
                           0.6904296875, 0.8525390625};
    for (std::size_t j = 0; j < 10; ++j) {
        CHECK(ps.points(5, j) == j5[j]);
        CHECK(ps.points(100, j) == j100[j]);
        CHECK(ps.points(777, j) == j777[j]);
    }
}

TEST_CASE("sobol rejects dimensions past the direction-number table") {
    CHECK_THROWS_WITH_AS(generate_sobol(4, sobol_max_dimension() + 1),
                         doctest::Contains("360"), std::invalid_argument);
}

TEST_CASE("hua-wang square-root construction hand values") {
    const auto ps = generate_hua_wang(2, 1);
    CHECK(ps.points(0, 0) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));
    CHECK(ps.points(1, 0) == doctest::Approx(2.0 * std::sqrt(2.0) - 2.0).epsilon(1e-15));
}

TEST_CASE("uniform generator honors the determinism contract") {
    const auto a = random_uniform(30, 4, 42);
    const auto b = random_uniform(30, 4, 42);
    const auto c = random_uniform(30, 4, 43);
    CHECK(a.points.data == b.points.data);
    bool differs = false;
    for (std::size_t i = 0; i < a.points.data.size(); ++i)
        differs |= a.points.data[i] != c.points.data[i];
    CHECK(differs);
}

TEST_CASE("point files round-trip and the loader validates") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ldseds_pointset_test";
    fs::create_directories(dir);

    const auto ps = generate_halton(12, 3);
    write_point_set(ps.points, dir / "ok.txt");
    const auto loaded = load_point_set(dir / "ok.txt");
    CHECK(loaded.generator_id == Generator::External);
    REQUIRE(loaded.size() == 12);
    REQUIRE(loaded.dim() == 3);
    CHECK(loaded.points.data == ps.points.data);

    {
        std::ofstream bad(dir / "range.txt");
        bad << "0.25 0.5\n0.1 1.5\n";
    }
    CHECK_THROWS_AS(load_point_set(dir / "range.txt"), std::invalid_argument);
    {
        std::ofstream bad(dir / "ragged.txt");
        bad << "0.25 0.5\n0.1\n";
    }
    CHECK_THROWS_AS(load_point_set(dir / "ragged.txt"), std::invalid_argument);
    CHECK_THROWS(load_point_set(dir / "missing.txt"));
    fs::remove_all(dir);
}
