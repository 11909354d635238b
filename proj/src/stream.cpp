#include "ldseds/stream.hpp"

#include <stdexcept>
#include <string>

#include "ldseds/rng.hpp"

namespace ldseds {

std::string to_string(SwarmMode m) { return m == SwarmMode::Pso ? "pso" : "clpso"; }

SwarmMode parse_swarm_mode(std::string_view name) {
    if (name == "pso") return SwarmMode::Pso;
    if (name == "clpso") return SwarmMode::Clpso;
    throw std::invalid_argument("unknown swarm mode '" + std::string(name) + "'");
}

std::string to_string(StreamConstruction c) {
    switch (c) {
        case StreamConstruction::Random: return "random";
        case StreamConstruction::DirectLds: return "direct";
        case StreamConstruction::CombinedLds: return "combined";
    }
    return "unknown";
}

StreamConstruction parse_construction(std::string_view name) {
    if (name == "random") return StreamConstruction::Random;
    if (name == "direct") return StreamConstruction::DirectLds;
    if (name == "combined") return StreamConstruction::CombinedLds;
    throw std::invalid_argument("unknown stream construction '" + std::string(name) + "'");
}

namespace {

std::size_t blocks_for(SwarmMode mode, std::size_t horizon) {
    return mode == SwarmMode::Pso ? 2 * horizon + 2 : horizon + 2;
}

}  // namespace

EpsilonStream EpsilonStream::direct(Generator g, std::size_t n, std::size_t d,
                                    std::size_t horizon, SwarmMode mode,
                                    std::uint64_t seed, std::uint64_t start_index) {
    if (n == 0 || d == 0) throw std::invalid_argument("stream needs n >= 1 and d >= 1");
    EpsilonStream s;
    s.construction_ = StreamConstruction::DirectLds;
    s.mode_ = mode;
    s.generator_ = g;
    s.n_ = n;
    s.d_ = d;
    s.horizon_ = horizon;
    s.seed_ = seed;
    s.start_index_ = start_index;
    // Validate the total dimension up front so an oversized horizon fails
    // cleanly before any run starts.
    const std::size_t total = blocks_for(mode, horizon) * d;
    double probe = 0.0;
    detail::fill_generator_column(g, seed, start_index, total - 1, 1, 1, &probe);
    (void)probe;
    return s;
}

EpsilonStream EpsilonStream::direct(Generator g, std::size_t n, std::size_t d,
                                    std::size_t horizon, SwarmMode mode,
                                    std::uint64_t seed) {
    return direct(g, n, d, horizon, mode, seed, default_start_index(g));
}

EpsilonStream EpsilonStream::combined(PointSet seed_set, std::size_t expected_dim,
                                      std::size_t horizon, SwarmMode mode,
                                      std::uint64_t permutation_seed) {
    if (seed_set.dim() != expected_dim)
        throw std::invalid_argument("seed set dimension " + std::to_string(seed_set.dim()) +
                                    " does not match requested dimension " +
                                    std::to_string(expected_dim));
    if (seed_set.size() == 0 || seed_set.dim() == 0)
        throw std::invalid_argument("seed set must be non-empty");
    EpsilonStream s;
    s.construction_ = StreamConstruction::CombinedLds;
    s.mode_ = mode;
    s.generator_ = seed_set.generator_id;
    s.n_ = seed_set.size();
    s.d_ = seed_set.dim();
    s.horizon_ = horizon;
    s.seed_ = seed_set.seed;
    s.permutation_seed_ = permutation_seed;
    s.start_index_ = seed_set.start_index;
    s.seed_set_ = std::move(seed_set);
    return s;
}

EpsilonStream EpsilonStream::random(std::size_t n, std::size_t d, std::size_t horizon,
                                    SwarmMode mode, std::uint64_t seed) {
    EpsilonStream s = direct(Generator::Uniform, n, d, horizon, mode, seed, 0);
    s.construction_ = StreamConstruction::Random;
    return s;
}

std::size_t EpsilonStream::block_count() const { return blocks_for(mode_, horizon_); }

std::size_t EpsilonStream::block_index(const BlockRole& role) const {
    using Kind = BlockRole::Kind;
    switch (role.kind) {
        case Kind::InitPosition: return 0;
        case Kind::InitVelocity: return 1;
        case Kind::Cognitive:
        case Kind::Social:
            if (mode_ != SwarmMode::Pso)
                throw std::invalid_argument("cognitive/social roles need a PSO stream");
            if (role.g < 1 || role.g > horizon_)
                throw std::invalid_argument("iteration " + std::to_string(role.g) +
                                            " outside 1.." + std::to_string(horizon_));
            return role.kind == Kind::Cognitive ? 2 * role.g : 2 * role.g + 1;
        case Kind::Learning:
            if (mode_ != SwarmMode::Clpso)
                throw std::invalid_argument("learning role needs a CLPSO stream");
            if (role.g < 1 || role.g > horizon_)
                throw std::invalid_argument("iteration " + std::to_string(role.g) +
                                            " outside 1.." + std::to_string(horizon_));
            return role.g + 1;
    }
    throw std::invalid_argument("unknown block role");
}

std::vector<std::size_t> EpsilonStream::block_permutation(std::size_t index) const {
    if (construction_ != StreamConstruction::CombinedLds)
        throw std::invalid_argument("block permutations exist only for the combined construction");
    if (index >= block_count())
        throw std::invalid_argument("block index out of range");
    std::vector<std::size_t> perm(d_);
    if (index == 0) {
        for (std::size_t j = 0; j < d_; ++j) perm[j] = j;
        return perm;
    }
    // Each block's permutation depends only on (permutation_seed, block), so
    // extending the horizon never perturbs earlier blocks.
    SplitMix64 draws(seed_combine(permutation_seed_, index));
    return random_permutation(d_, draws);
}

Matrix EpsilonStream::block(std::size_t index) const {
    if (index >= block_count())
        throw std::invalid_argument("block index " + std::to_string(index) +
                                    " out of range (stream has " +
                                    std::to_string(block_count()) + " blocks)");
    Matrix out(n_, d_);
    if (construction_ == StreamConstruction::CombinedLds) {
        const auto perm = block_permutation(index);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                out(i, j) = seed_set_.points(i, perm[j]);
        return out;
    }
    for (std::size_t j = 0; j < d_; ++j)
        detail::fill_generator_column(generator_, seed_, start_index_, index * d_ + j, n_,
                                      d_, out.data.data() + j);
    return out;
}

Matrix EpsilonStream::flatten() const {
    const std::size_t blocks = block_count();
    Matrix out(n_, blocks * d_);
    for (std::size_t b = 0; b < blocks; ++b) {
        const Matrix blk = block(b);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < d_; ++j) out(i, b * d_ + j) = blk(i, j);
    }
    return out;
}

}  // namespace ldseds
