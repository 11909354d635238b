#include "ldseds/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "ldseds/dispersion.hpp"
#include "ldseds/objectives.hpp"
#include "ldseds/rng.hpp"

namespace ldseds {

namespace {

using nlohmann::json;

constexpr const char* kArtifactVersion = "0.1.0";
constexpr const char* kManifestName = "manifest.json";

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

LinearSchedule schedule_from(const json& j, LinearSchedule fallback) {
    if (j.is_null()) return fallback;
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("schedule must be a [start, end] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

json schedule_to(const LinearSchedule& s) { return json::array({s.start, s.end}); }

}  // namespace

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("config parse error in " + path.string() + ": " + e.what());
    }

    try {
        ExperimentConfig cfg;
        cfg.name = j.value("name", std::string("experiment"));
        cfg.n_particles = j.value("n_particles", cfg.n_particles);
        cfg.dim = j.value("dim", cfg.dim);
        cfg.horizon = j.value("horizon", cfg.horizon);
        cfg.runs_per_cell = j.value("runs_per_cell", cfg.runs_per_cell);
        if (j.contains("tolerances"))
            cfg.tolerances = j.at("tolerances").get<std::vector<double>>();
        cfg.master_seed = j.value("master_seed", cfg.master_seed);
        cfg.jobs = j.value("jobs", cfg.jobs);
        cfg.velocity_fraction = j.value("velocity_fraction", cfg.velocity_fraction);

        if (j.contains("pso_schedule")) {
            const json& s = j.at("pso_schedule");
            cfg.pso.omega = schedule_from(s.value("omega", json()), cfg.pso.omega);
            cfg.pso.c1 = schedule_from(s.value("c1", json()), cfg.pso.c1);
            cfg.pso.c2 = schedule_from(s.value("c2", json()), cfg.pso.c2);
        }
        if (j.contains("clpso_schedule")) {
            const json& s = j.at("clpso_schedule");
            cfg.clpso.omega = schedule_from(s.value("omega", json()), cfg.clpso.omega);
            cfg.clpso.c = s.value("c", cfg.clpso.c);
            cfg.clpso.refresh_gap = s.value("refresh_gap", cfg.clpso.refresh_gap);
        }

        for (const json& f : j.at("functions")) {
            FunctionSpec fs;
            fs.id = f.at("id").get<std::string>();
            if (f.contains("dim")) fs.dim = f.at("dim").get<std::size_t>();
            if (f.contains("shift_seed")) fs.shift_seed = f.at("shift_seed").get<std::uint64_t>();
            if (f.contains("rot_seed")) fs.rot_seed = f.at("rot_seed").get<std::uint64_t>();
            cfg.functions.push_back(std::move(fs));
        }
        for (const json& a : j.at("algorithms")) {
            AlgorithmSpec as;
            as.id = a.at("id").get<std::string>();
            as.engine = parse_engine(a.at("engine").get<std::string>());
            const json& s = a.at("sampler");
            as.sampler.construction = parse_construction(s.at("construction").get<std::string>());
            if (as.sampler.construction != StreamConstruction::Random) {
                as.sampler.generator = parse_generator(s.at("generator").get<std::string>());
                if (as.sampler.generator == Generator::External)
                    as.sampler.external_path = s.at("path").get<std::string>();
            }
            cfg.algorithms.push_back(std::move(as));
        }
        validate_config(cfg);
        return cfg;
    } catch (const json::exception& e) {
        throw std::invalid_argument("config error in " + path.string() + ": " + e.what());
    }
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.functions.empty()) throw std::invalid_argument("config: no functions");
    if (cfg.algorithms.empty()) throw std::invalid_argument("config: no algorithms");
    if (cfg.runs_per_cell < 1) throw std::invalid_argument("config: runs_per_cell must be >= 1");
    if (cfg.horizon < 1) throw std::invalid_argument("config: horizon must be >= 1");
    if (cfg.dim < 1) throw std::invalid_argument("config: dim must be >= 1");
    if (cfg.tolerances.empty()) throw std::invalid_argument("config: no tolerances");
    for (double t : cfg.tolerances)
        if (!(t > 0.0 && t < 1.0))
            throw std::invalid_argument("config: tolerances must lie in (0, 1)");
    if (!(cfg.velocity_fraction > 0.0))
        throw std::invalid_argument("config: velocity_fraction must be positive");
    for (const auto& f : cfg.functions) {
        if (!is_registered_objective(f.id))
            throw std::invalid_argument("config: unknown objective id '" + f.id + "'");
    }
    for (std::size_t i = 0; i < cfg.functions.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.functions.size(); ++j)
            if (cfg.functions[i].id == cfg.functions[j].id)
                throw std::invalid_argument("config: duplicate function id '" +
                                            cfg.functions[i].id + "'");
    for (std::size_t i = 0; i < cfg.algorithms.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.algorithms.size(); ++j)
            if (cfg.algorithms[i].id == cfg.algorithms[j].id)
                throw std::invalid_argument("config: duplicate algorithm id '" +
                                            cfg.algorithms[i].id + "'");
    for (const auto& a : cfg.algorithms) {
        if (a.engine == EngineKind::Clpso && cfg.n_particles < 3)
            throw std::invalid_argument("config: CLPSO needs at least 3 particles");
        if (a.sampler.generator == Generator::External && a.sampler.external_path.empty())
            throw std::invalid_argument("config: external sampler needs a path");
    }
    if (cfg.n_particles < 1) throw std::invalid_argument("config: n_particles must be >= 1");
}

RunSeeds derive_run_seeds(std::uint64_t master_seed, const std::string& function_id,
                          const std::string& algorithm_id, std::size_t run_index,
                          const SamplerSpec& sampler, std::size_t n_particles) {
    std::uint64_t base = seed_combine(master_seed, hash_label(function_id));
    base = seed_combine(base, hash_label(algorithm_id));
    base = seed_combine(base, run_index);
    RunSeeds seeds;
    seeds.stream_seed = seed_combine(base, hash_label("stream"));
    seeds.aux_seed = seed_combine(base, hash_label("aux"));
    seeds.permutation_seed = seed_combine(base, hash_label("permutation"));
    // Deterministic sequences have no seed to vary, so distinct runs read
    // consecutive disjoint segments of the sequence instead.
    switch (sampler.generator) {
        case Generator::Halton:
        case Generator::Sobol:
        case Generator::HuaWang:
            seeds.start_index = 1 + run_index * n_particles;
            break;
        default:
            seeds.start_index = default_start_index(sampler.generator);
            break;
    }
    if (sampler.construction == StreamConstruction::Random) seeds.start_index = 0;
    return seeds;
}

std::pair<std::uint64_t, std::uint64_t> derive_function_seeds(std::uint64_t master_seed,
                                                              const std::string& function_id) {
    const std::uint64_t base = seed_combine(master_seed, hash_label(function_id));
    return {seed_combine(base, hash_label("shift")), seed_combine(base, hash_label("rotation"))};
}

EpsilonStream build_run_stream(const SamplerSpec& sampler, SwarmMode mode,
                               std::size_t n_particles, std::size_t dim,
                               std::size_t horizon, const RunSeeds& seeds) {
    switch (sampler.construction) {
        case StreamConstruction::Random:
            return EpsilonStream::random(n_particles, dim, horizon, mode, seeds.stream_seed);
        case StreamConstruction::DirectLds:
            return EpsilonStream::direct(sampler.generator, n_particles, dim, horizon, mode,
                                         seeds.stream_seed, seeds.start_index);
        case StreamConstruction::CombinedLds: {
            PointSet seed_set;
            if (sampler.generator == Generator::External) {
                seed_set = load_point_set(sampler.external_path);
                if (seed_set.size() != n_particles || seed_set.dim() != dim)
                    throw std::invalid_argument(
                        "external seed set " + sampler.external_path + " is " +
                        std::to_string(seed_set.size()) + "x" + std::to_string(seed_set.dim()) +
                        ", expected " + std::to_string(n_particles) + "x" + std::to_string(dim));
            } else {
                seed_set = generate_point_set(sampler.generator, n_particles, dim,
                                              seeds.stream_seed, seeds.start_index);
            }
            return EpsilonStream::combined(std::move(seed_set), dim, horizon, mode,
                                           seeds.permutation_seed);
        }
    }
    throw std::invalid_argument("unknown stream construction");
}

namespace {

struct ResolvedFunction {
    FunctionSpec spec;
    std::size_t dim;
    std::uint64_t shift_seed;
    std::uint64_t rot_seed;
    double bias;
    ObjectiveSpec objective;
};

ResolvedFunction resolve_function(const ExperimentConfig& cfg, const FunctionSpec& f) {
    ResolvedFunction r;
    r.spec = f;
    r.dim = f.dim.value_or(cfg.dim);
    const auto derived = derive_function_seeds(cfg.master_seed, f.id);
    r.shift_seed = f.shift_seed.value_or(derived.first);
    r.rot_seed = f.rot_seed.value_or(derived.second);
    r.bias = registered_bias(f.id);
    r.objective = make_registered(f.id, r.dim, r.shift_seed, r.rot_seed);
    return r;
}

std::string run_file_name(std::size_t run_index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "run_%04zu.csv", run_index);
    return buf;
}

struct RunSlot {
    std::size_t fi = 0, ai = 0, run = 0;
    RunSeeds seeds;
    bool ok = false;
    std::string error;
    double wall_seconds = 0.0;
    std::uint64_t evaluations = 0;
    std::string curve_file;
};

json config_echo(const ExperimentConfig& cfg, const std::vector<ResolvedFunction>& functions) {
    json j;
    j["name"] = cfg.name;
    j["n_particles"] = cfg.n_particles;
    j["dim"] = cfg.dim;
    j["horizon"] = cfg.horizon;
    j["runs_per_cell"] = cfg.runs_per_cell;
    j["tolerances"] = cfg.tolerances;
    j["master_seed"] = cfg.master_seed;
    j["jobs"] = cfg.jobs;
    j["velocity_fraction"] = cfg.velocity_fraction;
    j["pso_schedule"] = {{"omega", schedule_to(cfg.pso.omega)},
                         {"c1", schedule_to(cfg.pso.c1)},
                         {"c2", schedule_to(cfg.pso.c2)}};
    j["clpso_schedule"] = {{"omega", schedule_to(cfg.clpso.omega)},
                           {"c", cfg.clpso.c},
                           {"refresh_gap", cfg.clpso.refresh_gap}};
    j["functions"] = json::array();
    for (const auto& f : functions)
        j["functions"].push_back({{"id", f.spec.id},
                                  {"dim", f.dim},
                                  {"shift_seed", f.shift_seed},
                                  {"rot_seed", f.rot_seed},
                                  {"bias", f.bias}});
    j["algorithms"] = json::array();
    for (const auto& a : cfg.algorithms) {
        json s = {{"construction", to_string(a.sampler.construction)}};
        if (a.sampler.construction != StreamConstruction::Random) {
            s["generator"] = to_string(a.sampler.generator);
            if (a.sampler.generator == Generator::External)
                s["path"] = a.sampler.external_path;
        }
        j["algorithms"].push_back(
            {{"id", a.id}, {"engine", to_string(a.engine)}, {"sampler", s}});
    }
    return j;
}

ExperimentConfig config_from_echo(const json& j) {
    ExperimentConfig cfg;
    cfg.name = j.at("name").get<std::string>();
    cfg.n_particles = j.at("n_particles").get<std::size_t>();
    cfg.dim = j.at("dim").get<std::size_t>();
    cfg.horizon = j.at("horizon").get<std::size_t>();
    cfg.runs_per_cell = j.at("runs_per_cell").get<std::size_t>();
    cfg.tolerances = j.at("tolerances").get<std::vector<double>>();
    cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    cfg.jobs = j.at("jobs").get<int>();
    cfg.velocity_fraction = j.at("velocity_fraction").get<double>();
    const json& ps = j.at("pso_schedule");
    cfg.pso.omega = schedule_from(ps.at("omega"), cfg.pso.omega);
    cfg.pso.c1 = schedule_from(ps.at("c1"), cfg.pso.c1);
    cfg.pso.c2 = schedule_from(ps.at("c2"), cfg.pso.c2);
    const json& cs = j.at("clpso_schedule");
    cfg.clpso.omega = schedule_from(cs.at("omega"), cfg.clpso.omega);
    cfg.clpso.c = cs.at("c").get<double>();
    cfg.clpso.refresh_gap = cs.at("refresh_gap").get<std::size_t>();
    for (const json& f : j.at("functions")) {
        FunctionSpec fs;
        fs.id = f.at("id").get<std::string>();
        fs.dim = f.at("dim").get<std::size_t>();
        fs.shift_seed = f.at("shift_seed").get<std::uint64_t>();
        fs.rot_seed = f.at("rot_seed").get<std::uint64_t>();
        cfg.functions.push_back(std::move(fs));
    }
    for (const json& a : j.at("algorithms")) {
        AlgorithmSpec as;
        as.id = a.at("id").get<std::string>();
        as.engine = parse_engine(a.at("engine").get<std::string>());
        const json& s = a.at("sampler");
        as.sampler.construction = parse_construction(s.at("construction").get<std::string>());
        if (as.sampler.construction != StreamConstruction::Random) {
            as.sampler.generator = parse_generator(s.at("generator").get<std::string>());
            if (as.sampler.generator == Generator::External)
                as.sampler.external_path = s.at("path").get<std::string>();
        }
        cfg.algorithms.push_back(std::move(as));
    }
    return cfg;
}

RunConfig run_config_for(const ExperimentConfig& cfg, const AlgorithmSpec& alg,
                         std::size_t dim) {
    RunConfig rc;
    rc.engine = alg.engine;
    rc.n_particles = cfg.n_particles;
    rc.dim = dim;
    rc.horizon = cfg.horizon;
    rc.space = SearchSpace::box(dim, kBoxLower, kBoxUpper, cfg.velocity_fraction);
    rc.pso = cfg.pso;
    rc.clpso = cfg.clpso;
    return rc;
}

json load_manifest(const std::filesystem::path& results_dir) {
    std::ifstream in(results_dir / kManifestName);
    if (!in)
        throw std::invalid_argument("no manifest in " + results_dir.string());
    json j;
    in >> j;
    return j;
}

}  // namespace

void write_curve(const std::vector<double>& curve, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write curve file " + file.string());
    out << "iteration,best_fitness\n";
    for (std::size_t g = 0; g < curve.size(); ++g)
        out << g << ',' << format_double(curve[g]) << '\n';
}

std::vector<double> load_curve(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read curve file " + file.string());
    std::vector<double> curve;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        curve.push_back(std::stod(line.substr(comma + 1)));
    }
    return curve;
}

ExperimentOutcome run_experiment(const ExperimentConfig& cfg,
                                 const std::filesystem::path& out_dir, int jobs) {
    validate_config(cfg);
    if (jobs <= 0) jobs = cfg.jobs;
    if (jobs <= 0) jobs = 1;

    std::vector<ResolvedFunction> functions;
    for (const auto& f : cfg.functions) functions.push_back(resolve_function(cfg, f));

    std::filesystem::create_directories(out_dir);
    for (const auto& f : functions)
        for (const auto& a : cfg.algorithms)
            std::filesystem::create_directories(out_dir / "curves" / f.spec.id / a.id);

    // One slot per run; workers own disjoint slots and distinct curve files,
    // so no synchronization is needed beyond the work counter.
    std::vector<RunSlot> slots;
    slots.reserve(functions.size() * cfg.algorithms.size() * cfg.runs_per_cell);
    for (std::size_t fi = 0; fi < functions.size(); ++fi)
        for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai)
            for (std::size_t r = 0; r < cfg.runs_per_cell; ++r) {
                RunSlot slot;
                slot.fi = fi;
                slot.ai = ai;
                slot.run = r;
                slot.seeds = derive_run_seeds(cfg.master_seed, functions[fi].spec.id,
                                              cfg.algorithms[ai].id, r,
                                              cfg.algorithms[ai].sampler, cfg.n_particles);
                slot.curve_file = (std::filesystem::path("curves") / functions[fi].spec.id /
                                   cfg.algorithms[ai].id / run_file_name(r))
                                      .generic_string();
                slots.push_back(std::move(slot));
            }

    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (;;) {
            const std::size_t w = next.fetch_add(1);
            if (w >= slots.size()) return;
            RunSlot& slot = slots[w];
            const ResolvedFunction& fn = functions[slot.fi];
            const AlgorithmSpec& alg = cfg.algorithms[slot.ai];
            try {
                const SwarmMode mode =
                    alg.engine == EngineKind::Pso ? SwarmMode::Pso : SwarmMode::Clpso;
                const EpsilonStream stream = build_run_stream(
                    alg.sampler, mode, cfg.n_particles, fn.dim, cfg.horizon, slot.seeds);
                const Objective objective = [&fn](std::span<const double> x) {
                    return evaluate(fn.objective, x);
                };
                const RunConfig rc = run_config_for(cfg, alg, fn.dim);
                const RunRecord record =
                    run_optimizer(rc, objective, stream, slot.seeds.aux_seed);
                write_curve(record.curve, out_dir / slot.curve_file);
                slot.ok = true;
                slot.wall_seconds = record.wall_seconds;
                slot.evaluations = record.evaluations;
            } catch (const std::exception& e) {
                slot.ok = false;
                slot.error = e.what();
            }
        }
    };

    std::vector<std::thread> pool;
    const std::size_t thread_count = std::min<std::size_t>(jobs, slots.size());
    for (std::size_t t = 0; t + 1 < thread_count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    json manifest;
    manifest["artifact_version"] = kArtifactVersion;
    manifest["config"] = config_echo(cfg, functions);
    json cells = json::array();
    std::size_t slot_index = 0;
    ExperimentOutcome outcome;
    outcome.dir = out_dir;
    for (std::size_t fi = 0; fi < functions.size(); ++fi)
        for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
            json runs = json::array();
            for (std::size_t r = 0; r < cfg.runs_per_cell; ++r, ++slot_index) {
                const RunSlot& slot = slots[slot_index];
                json run = {{"run", slot.run},
                            {"stream_seed", slot.seeds.stream_seed},
                            {"aux_seed", slot.seeds.aux_seed},
                            {"permutation_seed", slot.seeds.permutation_seed},
                            {"start_index", slot.seeds.start_index},
                            {"status", slot.ok ? "ok" : "failed"}};
                if (slot.ok) {
                    run["curve_file"] = slot.curve_file;
                    run["wall_seconds"] = slot.wall_seconds;
                    run["evaluations"] = slot.evaluations;
                    ++outcome.runs_completed;
                } else {
                    run["error"] = slot.error;
                    ++outcome.runs_failed;
                }
                runs.push_back(std::move(run));
            }
            cells.push_back({{"function", functions[fi].spec.id},
                             {"algorithm", cfg.algorithms[ai].id},
                             {"runs", std::move(runs)}});
        }
    manifest["cells"] = std::move(cells);
    std::ofstream mf(out_dir / kManifestName);
    if (!mf) throw std::runtime_error("cannot write manifest in " + out_dir.string());
    mf << manifest.dump(2) << '\n';
    return outcome;
}

RankTable summarize(const std::filesystem::path& results_dir, double eps_tol,
                    RankMetric metric) {
    const json manifest = load_manifest(results_dir);
    const json& cfg = manifest.at("config");
    const std::size_t horizon = cfg.at("horizon").get<std::size_t>();

    std::vector<std::string> function_ids, algorithm_ids;
    std::vector<double> biases;
    for (const json& f : cfg.at("functions")) {
        function_ids.push_back(f.at("id").get<std::string>());
        biases.push_back(f.at("bias").get<double>());
    }
    for (const json& a : cfg.at("algorithms"))
        algorithm_ids.push_back(a.at("id").get<std::string>());

    std::vector<std::vector<MetricCell>> cells(
        function_ids.size(), std::vector<MetricCell>(algorithm_ids.size(), std::nullopt));

    for (const json& cell : manifest.at("cells")) {
        const std::string fid = cell.at("function").get<std::string>();
        const std::string aid = cell.at("algorithm").get<std::string>();
        const auto fi = std::find(function_ids.begin(), function_ids.end(), fid) -
                        function_ids.begin();
        const auto ai = std::find(algorithm_ids.begin(), algorithm_ids.end(), aid) -
                        algorithm_ids.begin();
        if (fi == static_cast<long>(function_ids.size()) ||
            ai == static_cast<long>(algorithm_ids.size()))
            throw std::runtime_error("manifest cell references unknown " + fid + "/" + aid);

        // A cell with any aborted run is treated as failed outright; the
        // mean curve over a partial run set would not be comparable.
        bool all_ok = true;
        std::vector<double> mean_curve(horizon, 0.0);
        double total_seconds = 0.0;
        std::size_t n_runs = 0;
        for (const json& run : cell.at("runs")) {
            if (run.at("status").get<std::string>() != "ok") {
                all_ok = false;
                break;
            }
            const auto curve = load_curve(results_dir / run.at("curve_file").get<std::string>());
            if (curve.size() != horizon + 1)
                throw std::runtime_error("curve length mismatch in " +
                                         run.at("curve_file").get<std::string>());
            for (std::size_t g = 1; g <= horizon; ++g) mean_curve[g - 1] += curve[g];
            total_seconds += run.at("wall_seconds").get<double>();
            ++n_runs;
        }
        if (!all_ok || n_runs == 0) continue;  // stays Fail
        for (double& v : mean_curve) v /= static_cast<double>(n_runs);

        const ConvergenceOutcome cs = convergence_speed(mean_curve, biases[fi], eps_tol);
        if (cs.failed()) continue;
        if (metric == RankMetric::Cs) {
            cells[fi][ai] = static_cast<double>(*cs.cs);
        } else {
            // Estimated time to convergence: mean per-iteration cost times
            // the convergence iteration.
            const double seconds_per_iter =
                total_seconds / static_cast<double>(n_runs) / static_cast<double>(horizon);
            cells[fi][ai] = seconds_per_iter * static_cast<double>(*cs.cs);
        }
    }
    return build_rank_table(std::move(function_ids), std::move(algorithm_ids),
                            std::move(cells));
}

namespace {

std::string metric_cell_text(const MetricCell& cell, double rank, bool integral) {
    std::ostringstream os;
    if (!cell.has_value())
        os << "-";
    else if (integral)
        os << static_cast<long long>(std::llround(*cell));
    else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", *cell);
        os << buf;
    }
    char rbuf[32];
    if (rank == std::floor(rank))
        std::snprintf(rbuf, sizeof rbuf, "(%lld)", static_cast<long long>(rank));
    else
        std::snprintf(rbuf, sizeof rbuf, "(%.1f)", rank);
    os << rbuf;
    return os.str();
}

}  // namespace

std::string render_rank_report(const RankTable& table, const TestReport& report,
                               std::string_view format) {
    // CS cells are integral iterations; CT cells are fractional seconds.
    bool integral = true;
    for (const auto& row : table.metric)
        for (const auto& cell : row)
            if (cell.has_value() && *cell != std::floor(*cell)) integral = false;

    const auto avg_rank_positions = [&]() {
        std::vector<MetricCell> avg(table.k());
        for (std::size_t j = 0; j < table.k(); ++j) avg[j] = table.avg_ranks[j];
        return ranks_with_ties(avg);
    }();

    if (format == "json") {
        json j;
        j["functions"] = table.row_labels;
        j["algorithms"] = table.column_labels;
        j["metric"] = json::array();
        for (std::size_t i = 0; i < table.m(); ++i) {
            json row = json::array();
            for (std::size_t c = 0; c < table.k(); ++c) {
                if (table.metric[i][c].has_value())
                    row.push_back(*table.metric[i][c]);
                else
                    row.push_back(nullptr);
            }
            j["metric"].push_back(std::move(row));
        }
        j["ranks"] = table.ranks;
        j["avg_ranks"] = table.avg_ranks;
        j["chi_f"] = report.chi_f;
        j["tau_f"] = report.tau_f;
        j["tau_critical"] = report.tau_critical;
        j["significant"] = report.significant;
        j["cd"] = report.cd;
        j["alpha"] = report.alpha;
        j["pairwise_significant"] = report.pairwise_significant;
        return j.dump(2) + "\n";
    }

    if (format == "csv") {
        std::ostringstream os;
        os << "function";
        for (const auto& a : table.column_labels) os << ',' << a << ',' << a << "_rank";
        os << '\n';
        for (std::size_t i = 0; i < table.m(); ++i) {
            os << table.row_labels[i];
            for (std::size_t c = 0; c < table.k(); ++c) {
                os << ',';
                if (table.metric[i][c].has_value()) os << format_double(*table.metric[i][c]);
                else os << '-';
                os << ',' << table.ranks[i][c];
            }
            os << '\n';
        }
        os << "AvgR";
        for (std::size_t c = 0; c < table.k(); ++c)
            os << ',' << table.avg_ranks[c] << ',' << avg_rank_positions[c];
        os << '\n';
        os << "tau_F," << report.tau_f << "\ntau_critical," << report.tau_critical
           << "\nchi_F2," << report.chi_f << "\nCD," << report.cd << "\nsignificant,"
           << (report.significant ? "yes" : "no") << '\n';
        return os.str();
    }

    if (format != "text")
        throw std::invalid_argument("unknown report format '" + std::string(format) + "'");

    std::size_t label_width = 8;
    for (const auto& r : table.row_labels) label_width = std::max(label_width, r.size());
    std::vector<std::size_t> col_width(table.k());
    std::vector<std::vector<std::string>> body(table.m(), std::vector<std::string>(table.k()));
    for (std::size_t c = 0; c < table.k(); ++c) {
        col_width[c] = table.column_labels[c].size();
        for (std::size_t i = 0; i < table.m(); ++i) {
            body[i][c] = metric_cell_text(table.metric[i][c], table.ranks[i][c], integral);
            col_width[c] = std::max(col_width[c], body[i][c].size());
        }
    }
    std::ostringstream os;
    os << std::string(label_width, ' ');
    for (std::size_t c = 0; c < table.k(); ++c) {
        os << "  " << table.column_labels[c]
           << std::string(col_width[c] - table.column_labels[c].size(), ' ');
    }
    os << '\n';
    for (std::size_t i = 0; i < table.m(); ++i) {
        os << table.row_labels[i] << std::string(label_width - table.row_labels[i].size(), ' ');
        for (std::size_t c = 0; c < table.k(); ++c)
            os << "  " << body[i][c] << std::string(col_width[c] - body[i][c].size(), ' ');
        os << '\n';
    }
    os << "AvgR." << std::string(label_width - 5, ' ');
    for (std::size_t c = 0; c < table.k(); ++c) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.3f", table.avg_ranks[c]);
        std::string cell = std::string(buf);
        if (avg_rank_positions[c] == std::floor(avg_rank_positions[c]))
            cell += "(" + std::to_string(static_cast<long long>(avg_rank_positions[c])) + ")";
        else {
            std::snprintf(buf, sizeof buf, "(%.1f)", avg_rank_positions[c]);
            cell += buf;
        }
        os << "  " << cell << std::string(col_width[c] > cell.size() ? col_width[c] - cell.size() : 0, ' ');
    }
    os << '\n';
    char line[160];
    std::snprintf(line, sizeof line,
                  "tau_F = %.3f   tau_c(alpha=%.2f) = %.3f   chi_F^2 = %.3f   %s\n",
                  report.tau_f, report.alpha, report.tau_critical, report.chi_f,
                  report.significant ? "significant" : "not significant");
    os << line;
    std::snprintf(line, sizeof line, "Nemenyi CD = %.3f\n", report.cd);
    os << line;
    return os.str();
}

RunRecord replay_run(const std::filesystem::path& results_dir,
                     const std::string& function_id, const std::string& algorithm_id,
                     std::size_t run_index) {
    const json manifest = load_manifest(results_dir);
    const ExperimentConfig cfg = config_from_echo(manifest.at("config"));

    const FunctionSpec* fn = nullptr;
    for (const auto& f : cfg.functions)
        if (f.id == function_id) fn = &f;
    const AlgorithmSpec* alg = nullptr;
    for (const auto& a : cfg.algorithms)
        if (a.id == algorithm_id) alg = &a;
    if (!fn || !alg)
        throw std::invalid_argument("replay: unknown cell " + function_id + "/" + algorithm_id);
    if (run_index >= cfg.runs_per_cell)
        throw std::invalid_argument("replay: run index out of range");

    const std::size_t dim = fn->dim.value_or(cfg.dim);
    const ObjectiveSpec spec = make_registered(function_id, dim, *fn->shift_seed, *fn->rot_seed);
    const RunSeeds seeds = derive_run_seeds(cfg.master_seed, function_id, algorithm_id,
                                            run_index, alg->sampler, cfg.n_particles);
    const SwarmMode mode = alg->engine == EngineKind::Pso ? SwarmMode::Pso : SwarmMode::Clpso;
    const EpsilonStream stream =
        build_run_stream(alg->sampler, mode, cfg.n_particles, dim, cfg.horizon, seeds);
    const Objective objective = [&spec](std::span<const double> x) {
        return evaluate(spec, x);
    };
    return run_optimizer(run_config_for(cfg, *alg, dim), objective, stream, seeds.aux_seed);
}

std::string dispersion_report(const std::vector<std::pair<std::string, SamplerSpec>>& samplers,
                              SwarmMode mode, std::size_t n, std::size_t d, std::size_t g,
                              std::uint64_t probe_count, std::uint64_t seed) {
    if (samplers.empty())
        throw std::invalid_argument("dispersion_report: no samplers");
    const std::uint64_t probe_seed = seed_combine(seed, hash_label("probes"));
    std::ostringstream os;
    os << "sampler  construction  generator  n  d  blocks  total_dim  probes  dispersion\n";
    for (const auto& [name, sampler] : samplers) {
        const RunSeeds seeds = derive_run_seeds(seed, "dispersion", name, 0, sampler, n);
        const EpsilonStream stream = build_run_stream(sampler, mode, n, d, g, seeds);
        const Matrix flat = stream.flatten();
        const DispersionEstimate est = dispersion_mc(flat, probe_count, probe_seed);
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s  %s  %s  %zu  %zu  %zu  %zu  %llu  %.6f\n",
                      name.c_str(), to_string(sampler.construction).c_str(),
                      sampler.construction == StreamConstruction::Random
                          ? "-"
                          : to_string(sampler.generator).c_str(),
                      n, d, stream.block_count(), flat.cols,
                      static_cast<unsigned long long>(est.probe_count), est.value);
        os << buf;
    }
    return os.str();
}

}  // namespace ldseds
