#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ldseds/stats.hpp"
#include "ldseds/stream.hpp"
#include "ldseds/swarm.hpp"

namespace ldseds {

// How an algorithm builds its epsilon stream. For the combined construction
// the generator makes the low-dimensional seed set; External reads it from
// a plain-text point file.
struct SamplerSpec {
    StreamConstruction construction = StreamConstruction::Random;
    Generator generator = Generator::Uniform;
    std::string external_path;
};

struct AlgorithmSpec {
    std::string id;
    EngineKind engine = EngineKind::Pso;
    SamplerSpec sampler;
};

struct FunctionSpec {
    std::string id;
    std::optional<std::size_t> dim;
    std::optional<std::uint64_t> shift_seed;
    std::optional<std::uint64_t> rot_seed;
};

struct ExperimentConfig {
    std::string name = "experiment";
    std::size_t n_particles = 40;
    std::size_t dim = 10;
    std::size_t horizon = 1000;
    std::size_t runs_per_cell = 60;
    std::vector<double> tolerances = {0.05, 0.01};
    std::uint64_t master_seed = 1;
    int jobs = 1;
    double velocity_fraction = 0.2;
    PsoSchedule pso;
    ClpsoSchedule clpso;
    std::vector<FunctionSpec> functions;
    std::vector<AlgorithmSpec> algorithms;
};

ExperimentConfig load_experiment_config(const std::filesystem::path& path);
void validate_config(const ExperimentConfig& config);

// Deterministic seed fan-out. Seeds depend only on the master seed and the
// cell labels, never on list order or execution schedule.
struct RunSeeds {
    std::uint64_t stream_seed = 0;
    std::uint64_t aux_seed = 0;
    std::uint64_t permutation_seed = 0;
    std::uint64_t start_index = 0;
};

RunSeeds derive_run_seeds(std::uint64_t master_seed, const std::string& function_id,
                          const std::string& algorithm_id, std::size_t run_index,
                          const SamplerSpec& sampler, std::size_t n_particles);

// Landscape seeds for a function id under a master seed (used unless the
// config pins them explicitly).
std::pair<std::uint64_t, std::uint64_t> derive_function_seeds(std::uint64_t master_seed,
                                                              const std::string& function_id);

// Builds the per-run epsilon stream for an algorithm cell.
EpsilonStream build_run_stream(const SamplerSpec& sampler, SwarmMode mode,
                               std::size_t n_particles, std::size_t dim,
                               std::size_t horizon, const RunSeeds& seeds);

struct ExperimentOutcome {
    std::filesystem::path dir;
    std::size_t runs_completed = 0;
    std::size_t runs_failed = 0;
};

// Executes every (function, algorithm, run) cell, persisting one curve file
// per run plus a manifest that suffices to regenerate any curve bit-exactly.
// Failed runs are recorded in the manifest and do not stop the experiment.
ExperimentOutcome run_experiment(const ExperimentConfig& config,
                                 const std::filesystem::path& out_dir, int jobs);

enum class RankMetric { Cs, Ct };

// Reads a results directory back into the paper-style function x algorithm
// table: mean curve per cell, convergence speed against the tolerance, tied
// ranks. Cells that never converge become Fail entries; CT is the estimated
// wall time to convergence.
RankTable summarize(const std::filesystem::path& results_dir, double eps_tol,
                    RankMetric metric = RankMetric::Cs);

// Renders CS(rank) cells with AvgR and tau_F footer rows; format is "text",
// "csv", or "json".
std::string render_rank_report(const RankTable& table, const TestReport& report,
                               std::string_view format);

// Re-executes one run from manifest data alone.
RunRecord replay_run(const std::filesystem::path& results_dir,
                     const std::string& function_id, const std::string& algorithm_id,
                     std::size_t run_index);

std::vector<double> load_curve(const std::filesystem::path& curve_file);
void write_curve(const std::vector<double>& curve, const std::filesystem::path& file);

// Dispersion table across sampler constructions at matched shapes: the
// whole flattened expanded set per sampler, one row each.
std::string dispersion_report(const std::vector<std::pair<std::string, SamplerSpec>>& samplers,
                              SwarmMode mode, std::size_t n, std::size_t d, std::size_t g,
                              std::uint64_t probe_count, std::uint64_t seed);

}  // namespace ldseds
