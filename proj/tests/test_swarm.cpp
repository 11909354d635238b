#include <cmath>

#include "doctest.h"
#include "ldseds/swarm.hpp"

using namespace ldseds;

namespace {

Matrix filled(std::size_t n, std::size_t d, double value) {
    Matrix m(n, d);
    for (double& v : m.data) v = value;
    return m;
}

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

// Minimal state for stepping the engines directly in hand-case tests.
SwarmState manual_state_1d(std::size_t n, double x, double v, double pbest,
                           const Objective& objective) {
    SwarmState state;
    state.positions = filled(n, 1, x);
    state.velocities = filled(n, 1, v);
    state.pbest_pos = filled(n, 1, pbest);
    state.pbest_fit.assign(n, objective(std::span<const double>(&pbest, 1)));
    state.gbest_pos = {pbest};
    state.gbest_fit = state.pbest_fit[0];
    return state;
}

}  // namespace

TEST_CASE("search space defaults") {
    const auto space = SearchSpace::box(3, -100.0, 100.0);
    CHECK(space.velocity_max[0] == 40.0);  // 0.2 * 200
    CHECK(space.velocity_min[2] == -40.0);
    CHECK_THROWS_AS(SearchSpace::box(2, 5.0, 5.0), std::invalid_argument);
}

TEST_CASE("linear schedule endpoints and clamping") {
    const LinearSchedule s{0.9, 0.4};
    CHECK(s.at(0, 100) == 0.9);
    CHECK(s.at(99, 100) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(s.at(0, 1) == 0.9);
    const double mid = s.at(50, 101);
    CHECK(mid == doctest::Approx(0.65).epsilon(1e-12));
}

TEST_CASE("swarm initialization maps the unit blocks onto the box") {
    const auto space = SearchSpace::box(2, -4.0, 6.0);

    auto zeros = init_swarm(filled(5, 2, 0.0), filled(5, 2, 0.0), space, sphere);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(zeros.positions(i, j) == -4.0);
            CHECK(zeros.velocities(i, j) == space.velocity_min[j]);
        }

    auto ones = init_swarm(filled(5, 2, 1.0), filled(5, 2, 1.0), space, sphere);
    CHECK(ones.positions(0, 0) == 6.0);
    CHECK(ones.velocities(0, 0) == space.velocity_max[0]);

    auto half = init_swarm(filled(5, 2, 0.5), filled(5, 2, 0.5), space, sphere);
    CHECK(half.positions(2, 1) == 1.0);  // box center
    CHECK(half.velocities(2, 1) == 0.0);

    CHECK(half.gbest_fit == sphere(half.positions.row(0)));
    CHECK(half.pbest_pos.data == half.positions.data);
}

TEST_CASE("pso step hand case") {
    // x=0, v=0.1, pbest=0.2, gbest=0.4, w=0.5, c1=c2=2, eps=0.5
    // -> v = 0.05 + 0.2 + 0.4 = 0.65, x = 0.65
    const auto space = SearchSpace::box(1, -10.0, 10.0);  // v_max = 4, no clamp
    auto state = manual_state_1d(1, 0.0, 0.1, 0.2, sphere);
    state.gbest_pos = {0.4};
    state.gbest_fit = 0.16;
    pso_step(state, 0.5, 2.0, 2.0, filled(1, 1, 0.5), filled(1, 1, 0.5), space, sphere);
    CHECK(state.velocities(0, 0) == doctest::Approx(0.65).epsilon(1e-12));
    CHECK(state.positions(0, 0) == doctest::Approx(0.65).epsilon(1e-12));
    CHECK(state.iteration == 1);
}

TEST_CASE("pso step degenerate coefficients freeze the swarm") {
    const auto space = SearchSpace::box(1, -10.0, 10.0);
    auto state = manual_state_1d(3, 1.5, 0.7, 0.2, sphere);
    pso_step(state, 0.0, 0.0, 0.0, filled(3, 1, 0.9), filled(3, 1, 0.9), space, sphere);
    CHECK(state.velocities(0, 0) == 0.0);
    CHECK(state.positions(0, 0) == 1.5);
}

TEST_CASE("pso step is pure inertia when attractors coincide with the position") {
    const auto space = SearchSpace::box(1, -10.0, 10.0);
    auto state = manual_state_1d(2, 0.3, 0.25, 0.3, sphere);
    state.gbest_pos = {0.3};
    pso_step(state, 0.5, 2.0, 2.0, filled(2, 1, 0.8), filled(2, 1, 0.8), space, sphere);
    CHECK(state.velocities(1, 0) == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("pso step clamps velocity and clips position") {
    const auto space = SearchSpace::box(1, 0.0, 1.0);  // v_max = 0.2
    auto state = manual_state_1d(1, 0.9, 0.2, 0.9, sphere);
    state.gbest_pos = {0.9};
    // Huge inertia drives the raw velocity past the clamp.
    pso_step(state, 10.0, 0.0, 0.0, filled(1, 1, 0.0), filled(1, 1, 0.0), space, sphere);
    CHECK(state.velocities(0, 0) == 0.2);
    CHECK(state.positions(0, 0) == 1.0);  // 0.9 + 0.2 clipped to the box
}

TEST_CASE("clpso learning probabilities span 0.05 to 0.50 and increase") {
    const std::size_t n = 40;
    CHECK(clpso_pc(1, n) == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(clpso_pc(n, n) == doctest::Approx(0.50).epsilon(1e-12));
    for (std::size_t i = 1; i < n; ++i) CHECK(clpso_pc(i, n) < clpso_pc(i + 1, n));
}

TEST_CASE("exemplar assignment honors the learning probability") {
    SwarmState state;
    state.positions = filled(4, 3, 0.0);
    state.pbest_pos = filled(4, 3, 0.0);
    state.pbest_fit = {3.0, 9.0, 5.0, 7.0};

    SplitMix64 aux(11);
    // pc = 0: every dimension follows self, except one forced elsewhere.
    const auto self_heavy = assign_exemplars(state, 1, 0.0, aux);
    std::size_t others = 0;
    for (std::size_t j = 0; j < 3; ++j)
        if (self_heavy[j] != 1) ++others;
    CHECK(others == 1);

    // pc = 1: every dimension learns from somebody else.
    for (int trial = 0; trial < 20; ++trial) {
        const auto all_learn = assign_exemplars(state, 2, 1.0, aux);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(all_learn[j] != 2);
            CHECK(all_learn[j] < 4);
        }
    }
}

TEST_CASE("exemplar tournaments pick the fitter particle") {
    SwarmState state;
    state.positions = filled(3, 4, 0.0);
    state.pbest_pos = filled(3, 4, 0.0);
    state.pbest_fit = {3.0, 100.0, 5.0};
    SplitMix64 aux(5);
    // For particle 1 the only candidates are 0 (fit 3.0) and 2 (fit 5.0);
    // every tournament must return 0.
    const auto ex = assign_exemplars(state, 1, 1.0, aux);
    for (std::size_t j = 0; j < 4; ++j) CHECK(ex[j] == 0);

    SwarmState tiny;
    tiny.positions = filled(2, 1, 0.0);
    tiny.pbest_pos = filled(2, 1, 0.0);
    tiny.pbest_fit = {1.0, 2.0};
    CHECK_THROWS_AS(assign_exemplars(tiny, 0, 0.5, aux), std::invalid_argument);
}

TEST_CASE("clpso step hand case") {
    // x=0.2, v=0, exemplar pbest=0.8, w=0.5, c=1.49445, eps=0.5
    // -> v = 0.448335, x = 0.648335
    const auto space = SearchSpace::box(1, -10.0, 10.0);
    SwarmState state;
    state.positions = filled(3, 1, 0.2);
    state.velocities = filled(3, 1, 0.0);
    state.pbest_pos = filled(3, 1, 0.8);
    state.pbest_fit = {0.64, 0.64, 0.64};
    state.gbest_pos = {0.8};
    state.gbest_fit = 0.64;
    state.pc = {0.05, 0.25, 0.5};
    state.stagnation = {0, 0, 0};
    state.exemplar = {1, 2, 0};  // each particle guided by another's pbest
    SplitMix64 aux(1);
    clpso_step(state, 0.5, 1.49445, filled(3, 1, 0.5), space, sphere, 7, aux);
    CHECK(state.velocities(0, 0) == doctest::Approx(0.448335).epsilon(1e-12));
    CHECK(state.positions(0, 0) == doctest::Approx(0.648335).epsilon(1e-12));
}

TEST_CASE("clpso step reduces to inertia when exemplars coincide with position") {
    const auto space = SearchSpace::box(1, -10.0, 10.0);
    SwarmState state;
    state.positions = filled(3, 1, 0.4);
    state.velocities = filled(3, 1, 0.2);
    state.pbest_pos = filled(3, 1, 0.4);
    state.pbest_fit = {0.16, 0.16, 0.16};
    state.gbest_pos = {0.4};
    state.gbest_fit = 0.16;
    state.pc = {0.05, 0.25, 0.5};
    state.stagnation = {0, 0, 0};
    state.exemplar = {0, 1, 2};  // all self
    SplitMix64 aux(2);
    clpso_step(state, 0.5, 1.49445, filled(3, 1, 0.9), space, sphere, 7, aux);
    CHECK(state.velocities(1, 0) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("clpso direct jump with unit epsilon and no inertia") {
    const auto space = SearchSpace::box(1, -10.0, 10.0);
    SwarmState state;
    state.positions = filled(3, 1, 0.1);
    state.velocities = filled(3, 1, 0.0);
    state.pbest_pos = filled(3, 1, 0.9);
    state.pbest_fit = {0.81, 0.81, 0.81};
    state.gbest_pos = {0.9};
    state.gbest_fit = 0.81;
    state.pc = {0.05, 0.25, 0.5};
    state.stagnation = {0, 0, 0};
    state.exemplar = {1, 2, 0};
    SplitMix64 aux(3);
    clpso_step(state, 0.0, 1.0, filled(3, 1, 1.0), space, sphere, 7, aux);
    CHECK(state.positions(0, 0) == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("clpso keeps personal bests from out-of-box positions") {
    // The exemplar pulls the particle far outside; the step must not
    // evaluate there or accept a pbest.
    const auto space = SearchSpace::box(1, 0.0, 1.0, 100.0);  // huge v_max
    SwarmState state;
    state.positions = filled(3, 1, 0.5);
    state.velocities = filled(3, 1, 0.0);
    state.pbest_pos = filled(3, 1, 0.5);
    state.pbest_fit = {0.25, 0.25, 0.25};
    state.gbest_pos = {0.5};
    state.gbest_fit = 0.25;
    state.pc = {0.05, 0.25, 0.5};
    state.stagnation = {0, 0, 0};
    state.exemplar = {1, 2, 0};
    SplitMix64 aux(4);
    const Objective guarded = [&](std::span<const double> x) {
        REQUIRE(x[0] >= 0.0);
        REQUIRE(x[0] <= 1.0);
        return sphere(x);
    };
    // Push everyone to x = 0.5 + 1.0*(40 - 0.5) way outside the box.
    Matrix eps = filled(3, 1, 1.0);
    state.pbest_pos = filled(3, 1, 40.0);  // fake far exemplar target
    clpso_step(state, 0.0, 1.0, eps, space, guarded, 7, aux);
    CHECK(state.pbest_fit[0] == 0.25);     // unchanged
    CHECK(state.stagnation[0] == 1);
    CHECK(state.gbest_fit == 0.25);
}

TEST_CASE("run_optimizer produces a monotone curve and full block audit") {
    RunConfig cfg;
    cfg.engine = EngineKind::Pso;
    cfg.n_particles = 12;
    cfg.dim = 2;
    cfg.horizon = 30;
    cfg.space = SearchSpace::box(2, -5.0, 5.0);
    const auto stream = EpsilonStream::direct(Generator::Halton, 12, 2, 30, SwarmMode::Pso, 0);
    const auto record = run_optimizer(cfg, sphere, stream, 7);
    REQUIRE(record.curve.size() == 31);
    for (std::size_t g = 1; g < record.curve.size(); ++g)
        CHECK(record.curve[g] <= record.curve[g - 1]);
    REQUIRE(record.block_reads.size() == 62);
    for (auto reads : record.block_reads) CHECK(reads == 1);
    CHECK(record.evaluations == 12u * 31u);
}

TEST_CASE("run_optimizer for clpso audits the learning blocks") {
    RunConfig cfg;
    cfg.engine = EngineKind::Clpso;
    cfg.n_particles = 10;
    cfg.dim = 3;
    cfg.horizon = 25;
    cfg.space = SearchSpace::box(3, -5.0, 5.0);
    const auto stream = EpsilonStream::random(10, 3, 25, SwarmMode::Clpso, 3);
    const auto record = run_optimizer(cfg, sphere, stream, 7);
    REQUIRE(record.curve.size() == 26);
    for (std::size_t g = 1; g < record.curve.size(); ++g)
        CHECK(record.curve[g] <= record.curve[g - 1]);
    REQUIRE(record.block_reads.size() == 27);
    for (auto reads : record.block_reads) CHECK(reads == 1);
}

TEST_CASE("run_optimizer is deterministic") {
    RunConfig cfg;
    cfg.engine = EngineKind::Clpso;
    cfg.n_particles = 8;
    cfg.dim = 2;
    cfg.horizon = 40;
    cfg.space = SearchSpace::box(2, -5.0, 5.0);
    const auto stream = EpsilonStream::combined(generate_sobol(8, 2), 2, 40,
                                                SwarmMode::Clpso, 4);
    const auto a = run_optimizer(cfg, sphere, stream, 99);
    const auto b = run_optimizer(cfg, sphere, stream, 99);
    CHECK(a.curve == b.curve);
}

TEST_CASE("run_optimizer improves the sphere") {
    RunConfig cfg;
    cfg.engine = EngineKind::Pso;
    cfg.n_particles = 40;
    cfg.dim = 2;
    cfg.horizon = 200;
    cfg.space = SearchSpace::box(2, -100.0, 100.0);
    const auto stream = EpsilonStream::random(40, 2, 200, SwarmMode::Pso, 11);
    const auto record = run_optimizer(cfg, sphere, stream, 13);
    CHECK(record.curve.back() < record.curve.front());
}

TEST_CASE("run_optimizer with horizon zero records only initialization") {
    RunConfig cfg;
    cfg.engine = EngineKind::Pso;
    cfg.n_particles = 5;
    cfg.dim = 2;
    cfg.horizon = 0;
    cfg.space = SearchSpace::box(2, -1.0, 1.0);
    const auto stream = EpsilonStream::random(5, 2, 0, SwarmMode::Pso, 1);
    const auto record = run_optimizer(cfg, sphere, stream, 1);
    CHECK(record.curve.size() == 1);
}

TEST_CASE("run_optimizer validates stream compatibility before evaluating") {
    RunConfig cfg;
    cfg.engine = EngineKind::Pso;
    cfg.n_particles = 5;
    cfg.dim = 2;
    cfg.horizon = 10;
    cfg.space = SearchSpace::box(2, -1.0, 1.0);
    std::size_t evaluations = 0;
    const Objective counting = [&](std::span<const double> x) {
        ++evaluations;
        return sphere(x);
    };
    const auto wrong_mode = EpsilonStream::random(5, 2, 10, SwarmMode::Clpso, 1);
    CHECK_THROWS_AS(run_optimizer(cfg, counting, wrong_mode, 1), std::invalid_argument);
    const auto wrong_shape = EpsilonStream::random(6, 2, 10, SwarmMode::Pso, 1);
    CHECK_THROWS_AS(run_optimizer(cfg, counting, wrong_shape, 1), std::invalid_argument);
    const auto short_horizon = EpsilonStream::random(5, 2, 4, SwarmMode::Pso, 1);
    CHECK_THROWS_AS(run_optimizer(cfg, counting, short_horizon, 1), std::invalid_argument);
    CHECK(evaluations == 0);
}

TEST_CASE("non-finite fitness aborts with a diagnostic") {
    RunConfig cfg;
    cfg.engine = EngineKind::Pso;
    cfg.n_particles = 4;
    cfg.dim = 1;
    cfg.horizon = 5;
    cfg.space = SearchSpace::box(1, -1.0, 1.0);
    const Objective bad = [](std::span<const double>) {
        return std::numeric_limits<double>::quiet_NaN();
    };
    const auto stream = EpsilonStream::random(4, 1, 5, SwarmMode::Pso, 1);
    CHECK_THROWS_WITH_AS(run_optimizer(cfg, bad, stream, 1),
                         doctest::Contains("particle"), std::runtime_error);
}

TEST_CASE("every evaluated position stays inside the box") {
    RunConfig cfg;
    cfg.engine = EngineKind::Pso;
    cfg.n_particles = 15;
    cfg.dim = 3;
    cfg.horizon = 50;
    cfg.space = SearchSpace::box(3, -2.0, 3.0);
    const Objective guarded = [&](std::span<const double> x) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            REQUIRE(x[j] >= -2.0);
            REQUIRE(x[j] <= 3.0);
        }
        return sphere(x);
    };
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto stream = EpsilonStream::random(15, 3, 50, SwarmMode::Pso, seed);
        run_optimizer(cfg, guarded, stream, seed);
    }
}

TEST_CASE("short randomized runs keep the gbest curve non-increasing") {
    SplitMix64 pick(31337);
    for (int trial = 0; trial < 200; ++trial) {
        RunConfig cfg;
        cfg.engine = (trial % 2 == 0) ? EngineKind::Pso : EngineKind::Clpso;
        cfg.n_particles = 3 + pick.next_below(10);
        cfg.dim = 1 + pick.next_below(4);
        cfg.horizon = 1 + pick.next_below(12);
        cfg.space = SearchSpace::box(cfg.dim, -8.0, 8.0);
        const SwarmMode mode =
            cfg.engine == EngineKind::Pso ? SwarmMode::Pso : SwarmMode::Clpso;
        const auto stream = EpsilonStream::random(cfg.n_particles, cfg.dim, cfg.horizon,
                                                  mode, pick.next());
        const auto record = run_optimizer(cfg, sphere, stream, pick.next());
        for (std::size_t g = 1; g < record.curve.size(); ++g)
            CHECK(record.curve[g] <= record.curve[g - 1]);
    }
}
