#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ldseds/matrix.hpp"

namespace ldseds {

enum class Generator {
    Halton,
    ScrambledHalton,
    Sobol,
    HuaWang,
    Uniform,
    External,
};

std::string to_string(Generator g);
Generator parse_generator(std::string_view name);

// An n x d sample matrix in the unit hypercube plus the recipe that made it.
// Regenerating with the same (generator_id, n, d, seed, start_index) yields a
// bit-identical matrix; every coordinate lies in [0, 1).
struct PointSet {
    Matrix points;
    Generator generator_id = Generator::Uniform;
    std::uint64_t seed = 0;
    std::uint64_t start_index = 0;

    std::size_t size() const { return points.rows; }
    std::size_t dim() const { return points.cols; }
};

// First 2000 primes, the base table shared by the Halton and Hua-Wang
// generators. Generators reject dimensions past the table end.
std::span<const std::uint32_t> prime_table();

std::size_t sobol_max_dimension();

// Sum of permuted base-b digits of index mirrored about the radix point:
// sum pi(d_k) * b^-(k+1). The permutation, when given, must be a bijection
// on {0..base-1} fixing 0 so that finite expansions stay finite. An empty
// span means the identity.
double radical_inverse(std::uint64_t index, std::uint32_t base,
                       std::span<const std::uint32_t> digit_permutation = {});

// Seeded random permutation of {0..base-1} with 0 held fixed.
std::vector<std::uint32_t> digit_permutation(std::uint32_t base, std::uint64_t seed);

// Halton points with the first d primes as bases; scramble_seed switches on
// per-base digit permutations. start_index defaults to 1 so the all-zeros
// point is skipped.
PointSet generate_halton(std::size_t n, std::size_t d,
                         std::optional<std::uint64_t> scramble_seed = std::nullopt,
                         std::uint64_t start_index = 1);

// Binary digital Sobol points in natural index order from an embedded
// direction-number table; dimension 1 coincides with the base-2 van der
// Corput sequence and index 0 is the all-zeros point.
PointSet generate_sobol(std::size_t n, std::size_t d, std::uint64_t start_index = 1);

// Square-root good-point set: row i, column j is frac(i * frac(sqrt(p_j))).
PointSet generate_hua_wang(std::size_t n, std::size_t d, std::uint64_t start_index = 1);

// Seeded uniform matrix from the SplitMix64 counter stream.
PointSet random_uniform(std::size_t n, std::size_t d, std::uint64_t seed);

// Dispatch on generator id. External is rejected here; use load_point_set.
PointSet generate_point_set(Generator g, std::size_t n, std::size_t d,
                            std::uint64_t seed, std::uint64_t start_index);

// Conventional first sequence index per generator (1 for the deterministic
// sequences, 0 for the seeded uniform stream).
std::uint64_t default_start_index(Generator g);

// Plain-text point files: one point per line, whitespace-separated
// coordinates in [0, 1). The loader validates range and column count.
PointSet load_point_set(const std::filesystem::path& path);
void write_point_set(const Matrix& points, const std::filesystem::path& path);

namespace detail {

// Column kernel shared by point-set generation and stream block
// materialization: writes points start_index..start_index+n-1 of the given
// global column. Pure function of its arguments.
void fill_generator_column(Generator g, std::uint64_t seed, std::uint64_t start_index,
                           std::size_t column, std::size_t n, std::size_t stride,
                           double* out);

}  // namespace detail

}  // namespace ldseds
