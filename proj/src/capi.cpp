#include "ldseds.h"

#include <cstring>
#include <exception>
#include <ios>
#include <new>
#include <span>
#include <stdexcept>
#include <string>

#include "ldseds/dispersion.hpp"
#include "ldseds/harness.hpp"
#include "ldseds/point_set.hpp"
#include "ldseds/stats.hpp"
#include "ldseds/stream.hpp"

using namespace ldseds;

struct ldseds_point_set {
    PointSet ps;
};

struct ldseds_stream {
    EpsilonStream stream;
    explicit ldseds_stream(EpsilonStream s) : stream(std::move(s)) {}
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

// Maps the C++ error idiom onto status codes at the boundary.
template <typename Fn>
ldseds_status guarded(Fn&& fn) {
    try {
        fn();
        return LDSEDS_OK;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return LDSEDS_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return LDSEDS_NUMERIC_ERROR;
    } catch (const std::ios_base::failure& e) {
        set_error(e.what());
        return LDSEDS_IO_ERROR;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return LDSEDS_RUNTIME_ERROR;
    } catch (const std::exception& e) {
        set_error(e.what());
        return LDSEDS_RUNTIME_ERROR;
    } catch (...) {
        set_error("unknown error");
        return LDSEDS_RUNTIME_ERROR;
    }
}

ldseds_status require(bool ok, const char* message) {
    if (ok) return LDSEDS_OK;
    set_error(message);
    return LDSEDS_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* ldseds_version(void) { return "0.1.0"; }

const char* ldseds_last_error(void) { return g_last_error.c_str(); }

ldseds_status ldseds_point_set_create(const char* generator, int64_t n, int32_t d,
                                      uint64_t seed, uint64_t start_index,
                                      ldseds_point_set** out) {
    if (auto st = require(generator && out && n > 0 && d > 0,
                          "point_set_create: bad arguments"))
        return st;
    return guarded([&] {
        const Generator g = parse_generator(generator);
        const uint64_t start =
            start_index == UINT64_MAX ? default_start_index(g) : start_index;
        auto* handle = new ldseds_point_set{generate_point_set(
            g, static_cast<std::size_t>(n), static_cast<std::size_t>(d), seed, start)};
        *out = handle;
    });
}

ldseds_status ldseds_point_set_load(const char* path, ldseds_point_set** out) {
    if (auto st = require(path && out, "point_set_load: bad arguments")) return st;
    return guarded([&] { *out = new ldseds_point_set{load_point_set(path)}; });
}

int64_t ldseds_point_set_rows(const ldseds_point_set* ps) {
    return ps ? static_cast<int64_t>(ps->ps.size()) : 0;
}

int32_t ldseds_point_set_cols(const ldseds_point_set* ps) {
    return ps ? static_cast<int32_t>(ps->ps.dim()) : 0;
}

ldseds_status ldseds_point_set_copy(const ldseds_point_set* ps, double* out,
                                    size_t capacity) {
    if (auto st = require(ps && out, "point_set_copy: bad arguments")) return st;
    const auto& data = ps->ps.points.data;
    if (auto st = require(capacity >= data.size(), "point_set_copy: buffer too small"))
        return st;
    std::memcpy(out, data.data(), data.size() * sizeof(double));
    return LDSEDS_OK;
}

ldseds_status ldseds_point_set_write(const ldseds_point_set* ps, const char* path) {
    if (auto st = require(ps && path, "point_set_write: bad arguments")) return st;
    return guarded([&] { write_point_set(ps->ps.points, path); });
}

void ldseds_point_set_destroy(ldseds_point_set* ps) { delete ps; }

ldseds_status ldseds_dispersion_exact_1d(const double* values, int64_t count, double* out) {
    if (auto st = require(values && out && count > 0, "dispersion_exact_1d: bad arguments"))
        return st;
    return guarded([&] {
        *out = dispersion_exact_1d(
                   std::span<const double>(values, static_cast<std::size_t>(count)))
                   .value;
    });
}

ldseds_status ldseds_dispersion_mc(const ldseds_point_set* ps, int64_t probe_count,
                                   uint64_t probe_seed, double* out) {
    if (auto st = require(ps && out && probe_count > 0, "dispersion_mc: bad arguments"))
        return st;
    return guarded([&] {
        *out = dispersion_mc(ps->ps, static_cast<std::uint64_t>(probe_count), probe_seed)
                   .value;
    });
}

ldseds_status ldseds_stream_create(const char* construction, const char* generator,
                                   const char* mode, int64_t n_particles, int32_t dim,
                                   int64_t horizon, uint64_t seed,
                                   uint64_t permutation_seed, uint64_t start_index,
                                   ldseds_stream** out) {
    if (auto st = require(construction && mode && out && n_particles > 0 && dim > 0 &&
                              horizon >= 0,
                          "stream_create: bad arguments"))
        return st;
    return guarded([&] {
        const StreamConstruction c = parse_construction(construction);
        const SwarmMode m = parse_swarm_mode(mode);
        const std::size_t n = static_cast<std::size_t>(n_particles);
        const std::size_t d = static_cast<std::size_t>(dim);
        const std::size_t g = static_cast<std::size_t>(horizon);
        switch (c) {
            case StreamConstruction::Random:
                *out = new ldseds_stream(EpsilonStream::random(n, d, g, m, seed));
                return;
            case StreamConstruction::DirectLds: {
                if (!generator)
                    throw std::invalid_argument("direct construction needs a generator");
                const Generator gen = parse_generator(generator);
                const uint64_t start =
                    start_index == UINT64_MAX ? default_start_index(gen) : start_index;
                *out = new ldseds_stream(EpsilonStream::direct(gen, n, d, g, m, seed, start));
                return;
            }
            case StreamConstruction::CombinedLds: {
                if (!generator)
                    throw std::invalid_argument("combined construction needs a generator");
                const Generator gen = parse_generator(generator);
                const uint64_t start =
                    start_index == UINT64_MAX ? default_start_index(gen) : start_index;
                PointSet seed_set = generate_point_set(gen, n, d, seed, start);
                *out = new ldseds_stream(
                    EpsilonStream::combined(std::move(seed_set), d, g, m, permutation_seed));
                return;
            }
        }
        throw std::invalid_argument("unknown construction");
    });
}

ldseds_status ldseds_stream_create_from_seed_set(const ldseds_point_set* seed_set,
                                                 const char* mode, int64_t horizon,
                                                 uint64_t permutation_seed,
                                                 ldseds_stream** out) {
    if (auto st = require(seed_set && mode && out && horizon >= 0,
                          "stream_create_from_seed_set: bad arguments"))
        return st;
    return guarded([&] {
        *out = new ldseds_stream(EpsilonStream::combined(
            seed_set->ps, seed_set->ps.dim(), static_cast<std::size_t>(horizon),
            parse_swarm_mode(mode), permutation_seed));
    });
}

int64_t ldseds_stream_block_count(const ldseds_stream* s) {
    return s ? static_cast<int64_t>(s->stream.block_count()) : 0;
}

ldseds_status ldseds_stream_block(const ldseds_stream* s, const char* role, int64_t g,
                                  double* out, size_t capacity) {
    if (auto st = require(s && role && out, "stream_block: bad arguments")) return st;
    return guarded([&] {
        BlockRole r;
        const std::string_view name(role);
        const std::size_t iter = g < 0 ? 0 : static_cast<std::size_t>(g);
        if (name == "init_position") r = BlockRole::init_position();
        else if (name == "init_velocity") r = BlockRole::init_velocity();
        else if (name == "cognitive") r = BlockRole::cognitive(iter);
        else if (name == "social") r = BlockRole::social(iter);
        else if (name == "learning") r = BlockRole::learning(iter);
        else throw std::invalid_argument("unknown block role '" + std::string(name) + "'");
        const Matrix block = s->stream.block(r);
        if (capacity < block.data.size())
            throw std::invalid_argument("stream_block: buffer too small");
        std::memcpy(out, block.data.data(), block.data.size() * sizeof(double));
    });
}

void ldseds_stream_destroy(ldseds_stream* s) { delete s; }

ldseds_status ldseds_friedman(const double* avg_ranks, int32_t k, int64_t m,
                              double* chi_f, double* tau_f) {
    if (auto st = require(avg_ranks && chi_f && tau_f && k >= 2 && m >= 2,
                          "friedman: bad arguments"))
        return st;
    return guarded([&] {
        const auto result = friedman_modified(
            std::span<const double>(avg_ranks, static_cast<std::size_t>(k)),
            static_cast<std::size_t>(m), static_cast<std::size_t>(k));
        *chi_f = result.chi_f;
        *tau_f = result.tau_f;
    });
}

ldseds_status ldseds_f_critical(double alpha, int64_t df1, int64_t df2, double* out) {
    if (auto st = require(out && df1 > 0 && df2 > 0, "f_critical: bad arguments")) return st;
    return guarded([&] {
        *out = f_critical(alpha, static_cast<std::size_t>(df1), static_cast<std::size_t>(df2));
    });
}

ldseds_status ldseds_nemenyi_cd(int32_t k, int64_t m, double alpha, double* out) {
    if (auto st = require(out && k >= 2 && m >= 1, "nemenyi_cd: bad arguments")) return st;
    return guarded([&] {
        *out = nemenyi_cd(static_cast<std::size_t>(k), static_cast<std::size_t>(m), alpha);
    });
}

ldseds_status ldseds_experiment_run(const char* config_path, const char* out_dir,
                                    int32_t jobs, int64_t master_seed_override) {
    if (auto st = require(config_path && out_dir, "experiment_run: bad arguments")) return st;
    return guarded([&] {
        ExperimentConfig cfg = load_experiment_config(config_path);
        if (master_seed_override >= 0)
            cfg.master_seed = static_cast<std::uint64_t>(master_seed_override);
        const ExperimentOutcome outcome = run_experiment(cfg, out_dir, jobs);
        if (outcome.runs_failed > 0)
            throw std::runtime_error(std::to_string(outcome.runs_failed) +
                                     " run(s) failed; partial results in " +
                                     outcome.dir.string());
    });
}

ldseds_status ldseds_rank_report(const char* results_dir, double tolerance, double alpha,
                                 const char* metric, const char* format, char** out_text) {
    if (auto st = require(results_dir && out_text, "rank_report: bad arguments")) return st;
    return guarded([&] {
        const std::string metric_name = metric ? metric : "cs";
        RankMetric rm;
        if (metric_name == "cs") rm = RankMetric::Cs;
        else if (metric_name == "ct") rm = RankMetric::Ct;
        else throw std::invalid_argument("unknown metric '" + metric_name + "'");
        const RankTable table = summarize(results_dir, tolerance, rm);
        const TestReport report = make_test_report(table, alpha);
        *out_text = copy_string(
            render_rank_report(table, report, format ? format : "text"));
    });
}

ldseds_status ldseds_dispersion_report(const char* samplers_csv, const char* mode,
                                       int64_t n, int32_t d, int64_t horizon,
                                       int64_t probe_count, uint64_t seed,
                                       char** out_text) {
    if (auto st = require(samplers_csv && mode && out_text && n > 0 && d > 0 &&
                              probe_count > 0 && horizon >= 0,
                          "dispersion_report: bad arguments"))
        return st;
    return guarded([&] {
        std::vector<std::pair<std::string, SamplerSpec>> samplers;
        std::string_view rest(samplers_csv);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            std::string token(rest.substr(0, comma));
            rest = comma == std::string_view::npos ? std::string_view{}
                                                   : rest.substr(comma + 1);
            if (token.empty()) continue;
            SamplerSpec spec;
            const auto colon = token.find(':');
            if (colon == std::string::npos) {
                spec.construction = parse_construction(token);
            } else {
                spec.construction = parse_construction(token.substr(0, colon));
                spec.generator = parse_generator(token.substr(colon + 1));
            }
            if (spec.construction != StreamConstruction::Random &&
                spec.generator == Generator::External)
                throw std::invalid_argument(
                    "dispersion_report: external seed sets not supported in the sampler list");
            samplers.emplace_back(token, spec);
        }
        *out_text = copy_string(dispersion_report(
            samplers, parse_swarm_mode(mode), static_cast<std::size_t>(n),
            static_cast<std::size_t>(d), static_cast<std::size_t>(horizon),
            static_cast<std::uint64_t>(probe_count), seed));
    });
}

void ldseds_string_destroy(char* s) { delete[] s; }

}  // extern "C"
