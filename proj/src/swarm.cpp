#include "ldseds/swarm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ldseds {

SearchSpace SearchSpace::box(std::size_t dim, double lo, double hi,
                             double velocity_fraction) {
    return box(std::vector<double>(dim, lo), std::vector<double>(dim, hi),
               velocity_fraction);
}

SearchSpace SearchSpace::box(std::vector<double> lo, std::vector<double> hi,
                             double velocity_fraction) {
    if (lo.size() != hi.size() || lo.empty())
        throw std::invalid_argument("search space bounds must be same nonzero length");
    SearchSpace s;
    s.lower = std::move(lo);
    s.upper = std::move(hi);
    s.velocity_max.resize(s.lower.size());
    s.velocity_min.resize(s.lower.size());
    for (std::size_t j = 0; j < s.lower.size(); ++j) {
        if (!(s.lower[j] < s.upper[j]))
            throw std::invalid_argument("search space needs lower < upper in every dimension");
        s.velocity_max[j] = velocity_fraction * (s.upper[j] - s.lower[j]);
        s.velocity_min[j] = -s.velocity_max[j];
    }
    return s;
}

double LinearSchedule::at(std::size_t g, std::size_t horizon) const {
    if (horizon <= 1) return start;
    double t = static_cast<double>(g) / static_cast<double>(horizon - 1);
    t = std::clamp(t, 0.0, 1.0);
    return start + (end - start) * t;
}

namespace {

double clamp_to(double v, double lo, double hi) { return std::clamp(v, lo, hi); }

double evaluate_checked(const Objective& objective, std::span<const double> x,
                        std::size_t iteration, std::size_t particle) {
    const double fit = objective(x);
    if (!std::isfinite(fit)) {
        std::string where = "iteration " + std::to_string(iteration) + ", particle " +
                            std::to_string(particle) + ", position (";
        for (std::size_t j = 0; j < x.size(); ++j)
            where += (j ? ", " : "") + std::to_string(x[j]);
        where += ")";
        throw std::runtime_error("non-finite fitness at " + where);
    }
    return fit;
}

void refresh_gbest(SwarmState& state) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < state.pbest_fit.size(); ++i)
        if (state.pbest_fit[i] < state.pbest_fit[best]) best = i;
    if (state.pbest_fit[best] < state.gbest_fit) {
        state.gbest_fit = state.pbest_fit[best];
        state.gbest_pos.assign(state.pbest_pos.row(best).begin(),
                               state.pbest_pos.row(best).end());
    }
}

}  // namespace

SwarmState init_swarm(const Matrix& eps_pos, const Matrix& eps_vel,
                      const SearchSpace& space, const Objective& objective) {
    const std::size_t n = eps_pos.rows, d = eps_pos.cols;
    if (!eps_pos.same_shape(eps_vel))
        throw std::invalid_argument("init blocks must have identical shape");
    if (d != space.dim())
        throw std::invalid_argument("init blocks do not match search space dimension");

    SwarmState state;
    state.positions = Matrix(n, d);
    state.velocities = Matrix(n, d);
    state.pbest_pos = Matrix(n, d);
    state.pbest_fit.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            state.positions(i, j) =
                space.lower[j] + eps_pos(i, j) * (space.upper[j] - space.lower[j]);
            state.velocities(i, j) =
                space.velocity_min[j] +
                eps_vel(i, j) * (space.velocity_max[j] - space.velocity_min[j]);
            state.pbest_pos(i, j) = state.positions(i, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        try {
            state.pbest_fit[i] = evaluate_checked(objective, state.positions.row(i), 0, i);
        } catch (const std::exception& e) {
            throw std::runtime_error("initial evaluation failed for particle " +
                                     std::to_string(i) + ": " + e.what());
        }
        ++state.evaluations;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (state.pbest_fit[i] < state.pbest_fit[best]) best = i;
    state.gbest_fit = state.pbest_fit[best];
    state.gbest_pos.assign(state.pbest_pos.row(best).begin(), state.pbest_pos.row(best).end());
    state.iteration = 0;
    return state;
}

void pso_step(SwarmState& state, double omega, double c1, double c2,
              const Matrix& eps_cognitive, const Matrix& eps_social,
              const SearchSpace& space, const Objective& objective) {
    const std::size_t n = state.particle_count(), d = state.dim();
    if (eps_cognitive.rows != n || eps_cognitive.cols != d || !eps_cognitive.same_shape(eps_social))
        throw std::invalid_argument("epsilon blocks do not match swarm shape");

    // All velocity/position updates read the previous iteration's bests;
    // pbest and gbest refresh only after the whole population is evaluated.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            double v = omega * state.velocities(i, j) +
                       c1 * eps_cognitive(i, j) * (state.pbest_pos(i, j) - state.positions(i, j)) +
                       c2 * eps_social(i, j) * (state.gbest_pos[j] - state.positions(i, j));
            v = clamp_to(v, space.velocity_min[j], space.velocity_max[j]);
            state.velocities(i, j) = v;
            state.positions(i, j) =
                clamp_to(state.positions(i, j) + v, space.lower[j], space.upper[j]);
        }
    }
    ++state.iteration;
    for (std::size_t i = 0; i < n; ++i) {
        const double fit = evaluate_checked(objective, state.positions.row(i),
                                            state.iteration, i);
        ++state.evaluations;
        if (fit < state.pbest_fit[i]) {
            state.pbest_fit[i] = fit;
            for (std::size_t j = 0; j < d; ++j) state.pbest_pos(i, j) = state.positions(i, j);
        }
    }
    refresh_gbest(state);
}

double clpso_pc(std::size_t i, std::size_t n) {
    if (n < 2) throw std::invalid_argument("clpso_pc needs n >= 2");
    if (i < 1 || i > n) throw std::invalid_argument("clpso_pc particle index out of range");
    const double t = 10.0 * static_cast<double>(i - 1) / static_cast<double>(n - 1);
    return 0.05 + 0.45 * (std::exp(t) - 1.0) / (std::exp(10.0) - 1.0);
}

namespace {

// Fitter of two distinct random particles other than i.
std::size_t tournament_other(const SwarmState& state, std::size_t i, SplitMix64& aux) {
    const std::size_t n = state.particle_count();
    std::size_t a = aux.next_below(n - 1);
    if (a >= i) ++a;
    std::size_t b = aux.next_below(n - 2);
    if (b >= std::min(i, a)) ++b;
    if (b >= std::max(i, a)) ++b;
    return state.pbest_fit[a] <= state.pbest_fit[b] ? a : b;
}

}  // namespace

std::vector<std::size_t> assign_exemplars(const SwarmState& state, std::size_t i,
                                          double pc_i, SplitMix64& aux) {
    const std::size_t n = state.particle_count(), d = state.dim();
    if (n < 3)
        throw std::invalid_argument("exemplar assignment needs at least 3 particles");
    std::vector<std::size_t> exemplar(d, i);
    bool any_other = false;
    for (std::size_t j = 0; j < d; ++j) {
        if (aux.next_unit() < pc_i) {
            exemplar[j] = tournament_other(state, i, aux);
            any_other = true;
        }
    }
    if (!any_other) {
        const std::size_t forced = aux.next_below(d);
        exemplar[forced] = tournament_other(state, i, aux);
    }
    return exemplar;
}

void clpso_step(SwarmState& state, double omega, double c, const Matrix& eps_learning,
                const SearchSpace& space, const Objective& objective,
                std::size_t refresh_gap, SplitMix64& aux) {
    const std::size_t n = state.particle_count(), d = state.dim();
    if (eps_learning.rows != n || eps_learning.cols != d)
        throw std::invalid_argument("epsilon block does not match swarm shape");
    if (state.exemplar.size() != n * d)
        throw std::invalid_argument("exemplar matrix not populated; run via run_optimizer "
                                    "or assign exemplars first");

    // Re-pick stale exemplars before moving anyone.
    for (std::size_t i = 0; i < n; ++i) {
        if (state.stagnation[i] >= refresh_gap) {
            const auto fresh = assign_exemplars(state, i, state.pc[i], aux);
            std::copy(fresh.begin(), fresh.end(), state.exemplar.begin() + i * d);
            state.stagnation[i] = 0;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t guide = state.exemplar_at(i, j);
            double v = omega * state.velocities(i, j) +
                       c * eps_learning(i, j) *
                           (state.pbest_pos(guide, j) - state.positions(i, j));
            v = clamp_to(v, space.velocity_min[j], space.velocity_max[j]);
            state.velocities(i, j) = v;
            state.positions(i, j) += v;
        }
    }
    ++state.iteration;
    for (std::size_t i = 0; i < n; ++i) {
        bool inside = true;
        for (std::size_t j = 0; j < d; ++j) {
            if (state.positions(i, j) < space.lower[j] || state.positions(i, j) > space.upper[j]) {
                inside = false;
                break;
            }
        }
        // Out-of-box positions are not evaluated, so they cannot displace a
        // personal best.
        if (!inside) {
            ++state.stagnation[i];
            continue;
        }
        const double fit = evaluate_checked(objective, state.positions.row(i),
                                            state.iteration, i);
        ++state.evaluations;
        if (fit < state.pbest_fit[i]) {
            state.pbest_fit[i] = fit;
            for (std::size_t j = 0; j < d; ++j) state.pbest_pos(i, j) = state.positions(i, j);
            state.stagnation[i] = 0;
        } else {
            ++state.stagnation[i];
        }
    }
    refresh_gbest(state);
}

std::string to_string(EngineKind e) { return e == EngineKind::Pso ? "pso" : "clpso"; }

EngineKind parse_engine(std::string_view name) {
    if (name == "pso") return EngineKind::Pso;
    if (name == "clpso") return EngineKind::Clpso;
    throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

RunRecord run_optimizer(const RunConfig& config, const Objective& objective,
                        const EpsilonStream& stream, std::uint64_t aux_seed) {
    const SwarmMode want_mode =
        config.engine == EngineKind::Pso ? SwarmMode::Pso : SwarmMode::Clpso;
    if (stream.mode() != want_mode)
        throw std::invalid_argument("stream mode " + to_string(stream.mode()) +
                                    " does not match engine " + to_string(config.engine));
    if (stream.horizon() < config.horizon)
        throw std::invalid_argument("stream horizon " + std::to_string(stream.horizon()) +
                                    " shorter than configured " +
                                    std::to_string(config.horizon));
    if (stream.particle_count() != config.n_particles || stream.dim() != config.dim)
        throw std::invalid_argument("stream shape " + std::to_string(stream.particle_count()) +
                                    "x" + std::to_string(stream.dim()) +
                                    " does not match config " +
                                    std::to_string(config.n_particles) + "x" +
                                    std::to_string(config.dim));
    if (config.space.dim() != config.dim)
        throw std::invalid_argument("search space does not match config dimension");

    const auto t0 = std::chrono::steady_clock::now();
    RunRecord record;
    record.block_reads.assign(stream.block_count(), 0);
    record.provenance = {stream.construction(), stream.generator(), stream.seed(),
                         stream.permutation_seed(), stream.start_index(), aux_seed};
    const auto read_block = [&](const BlockRole& role) {
        ++record.block_reads[stream.block_index(role)];
        return stream.block(role);
    };

    SwarmState state = init_swarm(read_block(BlockRole::init_position()),
                                  read_block(BlockRole::init_velocity()), config.space,
                                  objective);
    record.curve.reserve(config.horizon + 1);
    record.curve.push_back(state.gbest_fit);

    SplitMix64 aux(aux_seed);
    if (config.engine == EngineKind::Clpso) {
        const std::size_t n = config.n_particles;
        state.pc.resize(n);
        state.stagnation.assign(n, 0);
        state.exemplar.resize(n * config.dim);
        for (std::size_t i = 0; i < n; ++i) {
            state.pc[i] = clpso_pc(i + 1, n);
            const auto ex = assign_exemplars(state, i, state.pc[i], aux);
            std::copy(ex.begin(), ex.end(), state.exemplar.begin() + i * config.dim);
        }
    }

    for (std::size_t g = 1; g <= config.horizon; ++g) {
        if (config.engine == EngineKind::Pso) {
            const double omega = config.pso.omega.at(g - 1, config.horizon);
            const double c1 = config.pso.c1.at(g - 1, config.horizon);
            const double c2 = config.pso.c2.at(g - 1, config.horizon);
            pso_step(state, omega, c1, c2, read_block(BlockRole::cognitive(g)),
                     read_block(BlockRole::social(g)), config.space, objective);
        } else {
            const double omega = config.clpso.omega.at(g - 1, config.horizon);
            clpso_step(state, omega, config.clpso.c, read_block(BlockRole::learning(g)),
                       config.space, objective, config.clpso.refresh_gap, aux);
        }
        record.curve.push_back(state.gbest_fit);
    }

    record.evaluations = state.evaluations;
    record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return record;
}

}  // namespace ldseds
