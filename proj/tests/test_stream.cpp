#include <algorithm>
#include <array>
#include <set>

#include "doctest.h"
#include "ldseds/dispersion.hpp"
#include "ldseds/rng.hpp"
#include "ldseds/stream.hpp"

using namespace ldseds;

TEST_CASE("block counts per mode") {
    const auto pso = EpsilonStream::random(8, 3, 3, SwarmMode::Pso, 1);
    CHECK(pso.block_count() == 8);  // 2G+2
    const auto clpso = EpsilonStream::random(8, 3, 3, SwarmMode::Clpso, 1);
    CHECK(clpso.block_count() == 5);  // G+2
}

TEST_CASE("role-to-index map is the documented one") {
    const auto pso = EpsilonStream::random(4, 2, 5, SwarmMode::Pso, 1);
    CHECK(pso.block_index(BlockRole::init_position()) == 0);
    CHECK(pso.block_index(BlockRole::init_velocity()) == 1);
    CHECK(pso.block_index(BlockRole::cognitive(1)) == 2);
    CHECK(pso.block_index(BlockRole::social(1)) == 3);
    CHECK(pso.block_index(BlockRole::cognitive(5)) == 10);
    CHECK(pso.block_index(BlockRole::social(5)) == 11);

    const auto clpso = EpsilonStream::random(4, 2, 5, SwarmMode::Clpso, 1);
    CHECK(clpso.block_index(BlockRole::learning(1)) == 2);
    CHECK(clpso.block_index(BlockRole::learning(5)) == 6);  // last block

    CHECK_THROWS_AS(pso.block_index(BlockRole::learning(1)), std::invalid_argument);
    CHECK_THROWS_AS(clpso.block_index(BlockRole::cognitive(1)), std::invalid_argument);
    CHECK_THROWS_AS(pso.block_index(BlockRole::cognitive(0)), std::invalid_argument);
    CHECK_THROWS_AS(pso.block_index(BlockRole::cognitive(6)), std::invalid_argument);
}

TEST_CASE("direct construction slices one high-dimensional generator call") {
    const std::size_t n = 10, d = 3, g = 2;
    const auto stream = EpsilonStream::direct(Generator::Halton, n, d, g, SwarmMode::Pso, 0);
    const std::size_t total = stream.block_count() * d;
    const auto whole = generate_halton(n, total);
    for (std::size_t b = 0; b < stream.block_count(); ++b) {
        const Matrix blk = stream.block(b);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < d; ++j)
                CHECK(blk(i, j) == whole.points(i, b * d + j));
    }
}

TEST_CASE("direct construction with an oversized horizon fails cleanly") {
    // Sobol's table holds 360 dimensions; (2G+2)*d pushes past it.
    CHECK_THROWS_WITH_AS(
        EpsilonStream::direct(Generator::Sobol, 4, 10, 50, SwarmMode::Pso, 0),
        doctest::Contains("360"), std::invalid_argument);
}

TEST_CASE("random construction equals direct uniform bit for bit") {
    const auto random = EpsilonStream::random(6, 2, 3, SwarmMode::Clpso, 99);
    const auto direct = EpsilonStream::direct(Generator::Uniform, 6, 2, 3,
                                              SwarmMode::Clpso, 99, 0);
    for (std::size_t b = 0; b < random.block_count(); ++b)
        CHECK(random.block(b).data == direct.block(b).data);
}

TEST_CASE("streams reproduce themselves and stay in the unit cube") {
    const auto a = EpsilonStream::direct(Generator::ScrambledHalton, 12, 4, 4,
                                         SwarmMode::Pso, 31);
    const auto b = EpsilonStream::direct(Generator::ScrambledHalton, 12, 4, 4,
                                         SwarmMode::Pso, 31);
    for (std::size_t blk = 0; blk < a.block_count(); ++blk) {
        const auto ma = a.block(blk), mb = b.block(blk);
        CHECK(ma.data == mb.data);
        for (double v : ma.data) {
            CHECK(v >= 0.0);
            CHECK(v < 1.0);
        }
    }
    // Lazy materialization returns identical data on repeated calls.
    CHECK(a.block(3).data == a.block(3).data);
}

TEST_CASE("combined construction relocates whole dimensions") {
    const auto seed_set = generate_halton(20, 6);
    const auto stream = EpsilonStream::combined(seed_set, 6, 4, SwarmMode::Pso, 555);
    REQUIRE(stream.block_count() == 10);

    // Block 0 is the seed set itself.
    CHECK(stream.block(0).data == seed_set.points.data);

    for (std::size_t b = 0; b < stream.block_count(); ++b) {
        const auto perm = stream.block_permutation(b);
        std::set<std::size_t> seen(perm.begin(), perm.end());
        CHECK(seen.size() == 6);  // bijective
        const Matrix blk = stream.block(b);
        for (std::size_t j = 0; j < 6; ++j) {
            // Column j of the block is column perm[j] of the seed set,
            // bitwise: dimensions are relocated, never altered.
            CHECK(blk.column(j) == seed_set.points.column(perm[j]));
        }
    }
}

TEST_CASE("combined blocks preserve every 1-D projection exactly") {
    const auto seed_set = generate_hua_wang(16, 4);
    const auto stream = EpsilonStream::combined(seed_set, 4, 6, SwarmMode::Clpso, 9);
    std::vector<double> seed_dispersion;
    for (std::size_t j = 0; j < 4; ++j)
        seed_dispersion.push_back(dispersion_exact_1d(seed_set.points.column(j)).value);
    for (std::size_t b = 0; b < stream.block_count(); ++b) {
        const Matrix blk = stream.block(b);
        const auto perm = stream.block_permutation(b);
        for (std::size_t j = 0; j < 4; ++j) {
            auto column = blk.column(j);
            auto source = seed_set.points.column(perm[j]);
            std::sort(column.begin(), column.end());
            std::sort(source.begin(), source.end());
            CHECK(column == source);
            CHECK(dispersion_exact_1d(blk.column(j)).value ==
                  seed_dispersion[perm[j]]);
        }
    }
}

TEST_CASE("extending the horizon never perturbs earlier blocks") {
    const auto seed_set = generate_halton(10, 5);
    const auto small = EpsilonStream::combined(seed_set, 5, 3, SwarmMode::Pso, 77);
    const auto large = EpsilonStream::combined(seed_set, 5, 20, SwarmMode::Pso, 77);
    for (std::size_t b = 0; b < small.block_count(); ++b)
        CHECK(small.block(b).data == large.block(b).data);
}

TEST_CASE("combined construction validates the seed set shape") {
    const auto seed_set = generate_halton(10, 5);
    CHECK_THROWS_AS(EpsilonStream::combined(seed_set, 4, 3, SwarmMode::Pso, 1),
                    std::invalid_argument);
}

TEST_CASE("flatten concatenates all blocks") {
    const auto stream = EpsilonStream::random(5, 2, 2, SwarmMode::Pso, 3);
    const Matrix flat = stream.flatten();
    CHECK(flat.rows == 5);
    CHECK(flat.cols == stream.block_count() * 2);
    const Matrix b3 = stream.block(3);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(flat(i, 3 * 2 + j) == b3(i, j));
}

TEST_CASE("random permutation basics") {
    SplitMix64 rng(1);
    CHECK(random_permutation(1, rng) == std::vector<std::size_t>{0});
    for (int trial = 0; trial < 10; ++trial) {
        auto perm = random_permutation(17, rng);
        std::sort(perm.begin(), perm.end());
        for (std::size_t i = 0; i < 17; ++i) CHECK(perm[i] == i);
    }
}

TEST_CASE("random permutation is uniform over the 6 orderings of length 3") {
    SplitMix64 rng(424242);
    const int draws = 60000;
    std::array<int, 6> counts{};
    for (int t = 0; t < draws; ++t) {
        const auto p = random_permutation(3, rng);
        const int code = static_cast<int>(p[0] * 2 + (p[1] > p[2] ? 1 : 0));
        counts[static_cast<std::size_t>(code)]++;
    }
    // Chi-square against uniform at significance 0.01: critical value for
    // 5 degrees of freedom is 15.086.
    const double expected = draws / 6.0;
    double chi2 = 0.0;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    CHECK(chi2 < 15.086);
}
