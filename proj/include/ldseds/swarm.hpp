#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ldseds/matrix.hpp"
#include "ldseds/rng.hpp"
#include "ldseds/stream.hpp"

namespace ldseds {

using Objective = std::function<double(std::span<const double>)>;

// Box search domain plus velocity bounds. The default construction sets
// v_max to 0.2 * (upper - lower) componentwise and v_min to -v_max.
struct SearchSpace {
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<double> velocity_min;
    std::vector<double> velocity_max;

    static SearchSpace box(std::size_t dim, double lo, double hi,
                           double velocity_fraction = 0.2);
    static SearchSpace box(std::vector<double> lo, std::vector<double> hi,
                           double velocity_fraction = 0.2);

    std::size_t dim() const { return lower.size(); }
};

// Linear coefficient ramp over a run: value at 0-based iteration g of a
// G-iteration run is start + (end - start) * g / (G - 1), clamped to the
// segment (constant when G == 1).
struct LinearSchedule {
    double start = 0.0;
    double end = 0.0;

    double at(std::size_t g, std::size_t horizon) const;
};

struct PsoSchedule {
    LinearSchedule omega{0.9, 0.4};
    LinearSchedule c1{2.5, 0.5};
    LinearSchedule c2{0.5, 2.5};
};

struct ClpsoSchedule {
    LinearSchedule omega{0.9, 0.2};
    double c = 1.49445;
    std::size_t refresh_gap = 7;
};

// Full per-run optimizer state. CLPSO additionally tracks, per particle, a
// per-dimension exemplar index matrix, a stagnation counter, and the fixed
// learning probability.
struct SwarmState {
    Matrix positions;
    Matrix velocities;
    Matrix pbest_pos;
    std::vector<double> pbest_fit;
    std::vector<double> gbest_pos;
    double gbest_fit = 0.0;
    std::size_t iteration = 0;
    std::uint64_t evaluations = 0;

    // CLPSO extras (empty for plain PSO)
    std::vector<std::size_t> exemplar;  // N x D particle indices, row-major
    std::vector<std::size_t> stagnation;
    std::vector<double> pc;

    std::size_t particle_count() const { return positions.rows; }
    std::size_t dim() const { return positions.cols; }
    std::size_t exemplar_at(std::size_t i, std::size_t d) const {
        return exemplar[i * positions.cols + d];
    }
};

// Maps the two init blocks onto positions in [a, b] and velocities in
// [v_min, v_max]; personal bests start at the initial positions and the
// global best at their argmin.
SwarmState init_swarm(const Matrix& eps_pos, const Matrix& eps_vel,
                      const SearchSpace& space, const Objective& objective);

// One synchronous PSO update: velocities from inertia plus epsilon-weighted
// pulls toward personal and global bests, clamped; positions clipped to the
// box; pbest/gbest refreshed only after all N evaluations.
void pso_step(SwarmState& state, double omega, double c1, double c2,
              const Matrix& eps_cognitive, const Matrix& eps_social,
              const SearchSpace& space, const Objective& objective);

// Learning probability for particle i of n (both 1-based size conventions:
// i in 1..n). Ranges from 0.05 at i=1 to 0.50 at i=n.
double clpso_pc(std::size_t i, std::size_t n);

// Per-dimension exemplar selection for particle i: with probability pc_i the
// dimension follows the fitter of two distinct random other particles,
// otherwise the particle itself; if every dimension chose self, one random
// dimension is forced to a tournament winner.
std::vector<std::size_t> assign_exemplars(const SwarmState& state, std::size_t i,
                                          double pc_i, SplitMix64& aux);

// One synchronous CLPSO update. Positions are not clipped; out-of-box
// positions are simply not evaluated, so they can never enter pbest.
// Stagnation counting and exemplar refresh are applied here.
void clpso_step(SwarmState& state, double omega, double c, const Matrix& eps_learning,
                const SearchSpace& space, const Objective& objective,
                std::size_t refresh_gap, SplitMix64& aux);

enum class EngineKind { Pso, Clpso };

std::string to_string(EngineKind e);
EngineKind parse_engine(std::string_view name);

struct RunConfig {
    EngineKind engine = EngineKind::Pso;
    std::size_t n_particles = 0;
    std::size_t dim = 0;
    std::size_t horizon = 0;
    SearchSpace space;
    PsoSchedule pso;
    ClpsoSchedule clpso;
};

struct RunProvenance {
    StreamConstruction construction = StreamConstruction::Random;
    Generator generator = Generator::Uniform;
    std::uint64_t stream_seed = 0;
    std::uint64_t permutation_seed = 0;
    std::uint64_t start_index = 0;
    std::uint64_t aux_seed = 0;
};

// Per-iteration best-fitness curve with full bookkeeping. curve[g] is the
// global best after iteration g, with index 0 the post-initialization value,
// so a G-iteration run records G+1 entries.
struct RunRecord {
    std::vector<double> curve;
    std::uint64_t evaluations = 0;
    double wall_seconds = 0.0;
    RunProvenance provenance;
    std::vector<std::uint32_t> block_reads;  // per-block consumption audit
};

// Drives a full run of either engine against an epsilon stream; validates
// mode/shape against the config before any evaluation.
RunRecord run_optimizer(const RunConfig& config, const Objective& objective,
                        const EpsilonStream& stream, std::uint64_t aux_seed);

}  // namespace ldseds
