#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldseds/matrix.hpp"
#include "ldseds/point_set.hpp"

namespace ldseds {

enum class SwarmMode { Pso, Clpso };
enum class StreamConstruction { Random, DirectLds, CombinedLds };

std::string to_string(SwarmMode m);
SwarmMode parse_swarm_mode(std::string_view name);
std::string to_string(StreamConstruction c);
StreamConstruction parse_construction(std::string_view name);

// Addresses one N x D block of the expanded sample set by what the engine
// uses it for. Cognitive/Social are PSO-only, Learning is CLPSO-only, with
// g in 1..G. The index map is total and injective:
//   InitPosition -> 0, InitVelocity -> 1,
//   PSO:   Cognitive(g) -> 2g, Social(g) -> 2g+1
//   CLPSO: Learning(g)  -> g+1
struct BlockRole {
    enum class Kind { InitPosition, InitVelocity, Cognitive, Social, Learning };
    Kind kind = Kind::InitPosition;
    std::size_t g = 0;

    static BlockRole init_position() { return {Kind::InitPosition, 0}; }
    static BlockRole init_velocity() { return {Kind::InitVelocity, 0}; }
    static BlockRole cognitive(std::size_t g) { return {Kind::Cognitive, g}; }
    static BlockRole social(std::size_t g) { return {Kind::Social, g}; }
    static BlockRole learning(std::size_t g) { return {Kind::Learning, g}; }
};

// The expanded-dimensional sample set for one optimizer run, sliced into
// role-addressed N x D blocks: 2G+2 blocks in PSO mode, G+2 in CLPSO mode.
// Blocks are materialized lazily as pure functions of the construction
// recipe, so only O(N*D) working memory is needed per iteration and
// concurrent readers are safe.
class EpsilonStream {
  public:
    // Slices one high-dimensional generator call of total dimension
    // block_count*d into consecutive d-column blocks.
    static EpsilonStream direct(Generator g, std::size_t n, std::size_t d,
                                std::size_t horizon, SwarmMode mode, std::uint64_t seed,
                                std::uint64_t start_index);
    static EpsilonStream direct(Generator g, std::size_t n, std::size_t d,
                                std::size_t horizon, SwarmMode mode, std::uint64_t seed);

    // Stacks column-permuted copies of a low-dimensional seed set: block 0
    // is the seed set itself, block b >= 1 relocates whole dimensions under
    // an independent seeded permutation. expected_dim guards against a seed
    // set of the wrong width.
    static EpsilonStream combined(PointSet seed_set, std::size_t expected_dim,
                                  std::size_t horizon, SwarmMode mode,
                                  std::uint64_t permutation_seed);

    // Independent seeded uniform blocks; identical to direct() with the
    // Uniform generator, bit for bit.
    static EpsilonStream random(std::size_t n, std::size_t d, std::size_t horizon,
                                SwarmMode mode, std::uint64_t seed);

    std::size_t block_count() const;
    std::size_t block_index(const BlockRole& role) const;

    Matrix block(std::size_t index) const;
    Matrix block(const BlockRole& role) const { return block(block_index(role)); }

    // The dimension permutation applied to block b (CombinedLds only;
    // identity for block 0).
    std::vector<std::size_t> block_permutation(std::size_t index) const;

    // N x (block_count * d) concatenation of all blocks, for dispersion
    // measurements of the whole expanded set.
    Matrix flatten() const;

    SwarmMode mode() const { return mode_; }
    StreamConstruction construction() const { return construction_; }
    std::size_t particle_count() const { return n_; }
    std::size_t dim() const { return d_; }
    std::size_t horizon() const { return horizon_; }
    Generator generator() const { return generator_; }
    std::uint64_t seed() const { return seed_; }
    std::uint64_t permutation_seed() const { return permutation_seed_; }
    std::uint64_t start_index() const { return start_index_; }

  private:
    EpsilonStream() = default;

    StreamConstruction construction_ = StreamConstruction::Random;
    SwarmMode mode_ = SwarmMode::Pso;
    Generator generator_ = Generator::Uniform;
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::size_t horizon_ = 0;
    std::uint64_t seed_ = 0;
    std::uint64_t permutation_seed_ = 0;
    std::uint64_t start_index_ = 0;
    PointSet seed_set_;  // CombinedLds only
};

}  // namespace ldseds
