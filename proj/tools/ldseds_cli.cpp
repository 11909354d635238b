// Command-line harness over the ldseds C API.
//
// Subcommands:
//   sample      dump a generator point set or one stream block as plain text
//   dispersion  Monte Carlo dispersion table across sampler constructions
//   run         execute an experiment config into an output directory
//   rank        summarize a results directory into rank tables (csv + json)
//   report      print the paper-style text table for a results directory
//
// Exit codes: 0 success, 1 invalid config/arguments, 2 runtime failure.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ldseds.h"

namespace {

int exit_code_for(ldseds_status status) {
    switch (status) {
        case LDSEDS_OK: return 0;
        case LDSEDS_INVALID_ARGUMENT: return 1;
        default: return 2;
    }
}

int fail(ldseds_status status) {
    std::cerr << "error: " << ldseds_last_error() << "\n";
    return exit_code_for(status);
}

struct SampleOptions {
    std::string generator = "halton";
    std::string construction;
    std::string mode = "pso";
    std::string role = "init_position";
    std::string out_path;
    std::string load_path;
    std::int64_t n = 16;
    std::int32_t d = 2;
    std::int64_t horizon = 0;
    std::int64_t g = 1;
    std::uint64_t seed = 0;
    std::uint64_t perm_seed = 0;
    std::uint64_t start = UINT64_MAX;
};

int write_matrix(const std::vector<double>& data, std::size_t rows, std::size_t cols,
                 const std::string& out_path) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        os = &file;
    }
    char buf[40];
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", data[i * cols + j]);
            *os << (j ? " " : "") << buf;
        }
        *os << "\n";
    }
    return 0;
}

int run_sample(const SampleOptions& opt) {
    if (opt.construction.empty()) {
        ldseds_point_set* ps = nullptr;
        ldseds_status st;
        if (!opt.load_path.empty())
            st = ldseds_point_set_load(opt.load_path.c_str(), &ps);
        else
            st = ldseds_point_set_create(opt.generator.c_str(), opt.n, opt.d, opt.seed,
                                         opt.start, &ps);
        if (st != LDSEDS_OK) return fail(st);
        const std::size_t rows = static_cast<std::size_t>(ldseds_point_set_rows(ps));
        const std::size_t cols = static_cast<std::size_t>(ldseds_point_set_cols(ps));
        std::vector<double> data(rows * cols);
        st = ldseds_point_set_copy(ps, data.data(), data.size());
        ldseds_point_set_destroy(ps);
        if (st != LDSEDS_OK) return fail(st);
        return write_matrix(data, rows, cols, opt.out_path);
    }

    ldseds_stream* stream = nullptr;
    ldseds_status st = ldseds_stream_create(opt.construction.c_str(), opt.generator.c_str(),
                                            opt.mode.c_str(), opt.n, opt.d, opt.horizon,
                                            opt.seed, opt.perm_seed, opt.start, &stream);
    if (st != LDSEDS_OK) return fail(st);
    std::vector<double> data(static_cast<std::size_t>(opt.n) *
                             static_cast<std::size_t>(opt.d));
    st = ldseds_stream_block(stream, opt.role.c_str(), opt.g, data.data(), data.size());
    ldseds_stream_destroy(stream);
    if (st != LDSEDS_OK) return fail(st);
    return write_matrix(data, static_cast<std::size_t>(opt.n),
                        static_cast<std::size_t>(opt.d), opt.out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Low-discrepancy sampling in the expanded dimensional space: "
                 "samplers, PSO/CLPSO engines, and the benchmarking harness"};
    app.require_subcommand(1);

    SampleOptions sample;
    CLI::App* cmd_sample =
        app.add_subcommand("sample", "Dump a point set or one stream block");
    cmd_sample->add_option("--generator", sample.generator,
                           "halton | halton_scrambled | sobol | hua_wang | uniform");
    cmd_sample->add_option("--construction", sample.construction,
                           "random | direct | combined (omit to dump a raw point set)");
    cmd_sample->add_option("--mode", sample.mode, "pso | clpso");
    cmd_sample->add_option("--role", sample.role,
                           "init_position | init_velocity | cognitive | social | learning");
    cmd_sample->add_option("--load", sample.load_path, "read an external point file instead");
    cmd_sample->add_option("-n,--n", sample.n, "points / particles");
    cmd_sample->add_option("-d,--dim", sample.d, "dimension");
    cmd_sample->add_option("-g,--horizon", sample.horizon, "stream horizon G");
    cmd_sample->add_option("--iteration", sample.g, "iteration for cognitive/social/learning");
    cmd_sample->add_option("--seed", sample.seed, "generator / scramble seed");
    cmd_sample->add_option("--perm-seed", sample.perm_seed, "combined-construction permutation seed");
    cmd_sample->add_option("--start", sample.start, "first sequence index");
    cmd_sample->add_option("-o,--out", sample.out_path, "output file (default stdout)");

    std::string disp_samplers = "random,direct:halton,combined:halton";
    std::string disp_mode = "pso";
    std::int64_t disp_n = 256, disp_horizon = 0, disp_probes = 100000;
    std::int32_t disp_d = 2;
    std::uint64_t disp_seed = 1;
    CLI::App* cmd_disp = app.add_subcommand(
        "dispersion", "Dispersion estimates of flattened expanded sample sets");
    cmd_disp->add_option("--samplers", disp_samplers,
                         "comma list of construction[:generator] entries");
    cmd_disp->add_option("--mode", disp_mode, "pso | clpso");
    cmd_disp->add_option("-n,--n", disp_n, "points / particles");
    cmd_disp->add_option("-d,--dim", disp_d, "dimension");
    cmd_disp->add_option("-g,--horizon", disp_horizon, "stream horizon G");
    cmd_disp->add_option("--probes", disp_probes, "Monte Carlo probe count");
    cmd_disp->add_option("--seed", disp_seed, "report seed");

    std::string run_config, run_out = "results";
    std::int32_t run_jobs = 0;
    std::int64_t run_seed = -1;
    CLI::App* cmd_run = app.add_subcommand("run", "Run an experiment config");
    cmd_run->add_option("--config", run_config, "experiment config (JSON)")->required();
    cmd_run->add_option("--out", run_out, "output directory");
    cmd_run->add_option("--jobs", run_jobs, "worker threads (0 = config hint)");
    cmd_run->add_option("--seed", run_seed, "override the config master seed");

    std::string rank_dir, rank_metric = "cs";
    std::vector<double> rank_tols;
    double rank_alpha = 0.05;
    CLI::App* cmd_rank = app.add_subcommand(
        "rank", "Write csv/json rank tables for a results directory");
    cmd_rank->add_option("--out", rank_dir, "results directory")->required();
    cmd_rank->add_option("--tol", rank_tols, "tolerances (default: the config's list)");
    cmd_rank->add_option("--alpha", rank_alpha, "significance level");
    cmd_rank->add_option("--metric", rank_metric, "cs | ct");

    std::string report_dir, report_metric = "cs";
    std::vector<double> report_tols;
    double report_alpha = 0.05;
    CLI::App* cmd_report =
        app.add_subcommand("report", "Print the text rank table for a results directory");
    cmd_report->add_option("--out", report_dir, "results directory")->required();
    cmd_report->add_option("--tol", report_tols, "tolerances (default: the config's list)");
    cmd_report->add_option("--alpha", report_alpha, "significance level");
    cmd_report->add_option("--metric", report_metric, "cs | ct");

    CLI11_PARSE(app, argc, argv);

    if (cmd_sample->parsed()) return run_sample(sample);

    if (cmd_disp->parsed()) {
        char* text = nullptr;
        const ldseds_status st =
            ldseds_dispersion_report(disp_samplers.c_str(), disp_mode.c_str(), disp_n,
                                     disp_d, disp_horizon, disp_probes, disp_seed, &text);
        if (st != LDSEDS_OK) return fail(st);
        std::cout << text;
        ldseds_string_destroy(text);
        return 0;
    }

    if (cmd_run->parsed()) {
        const ldseds_status st =
            ldseds_experiment_run(run_config.c_str(), run_out.c_str(), run_jobs, run_seed);
        if (st != LDSEDS_OK) return fail(st);
        std::cout << "results written to " << run_out << "\n";
        return 0;
    }

    const bool is_rank = cmd_rank->parsed();
    const std::string dir = is_rank ? rank_dir : report_dir;
    const std::string metric = is_rank ? rank_metric : report_metric;
    std::vector<double> tols = is_rank ? rank_tols : report_tols;
    const double alpha = is_rank ? rank_alpha : report_alpha;

    if (tols.empty()) {
        // Fall back to the tolerances recorded in the manifest.
        std::ifstream manifest(dir + "/manifest.json");
        if (!manifest) {
            std::cerr << "error: no manifest in " << dir << "\n";
            return 1;
        }
        std::string content((std::istreambuf_iterator<char>(manifest)),
                            std::istreambuf_iterator<char>());
        const auto key = content.find("\"tolerances\"");
        if (key != std::string::npos) {
            const auto open = content.find('[', key);
            const auto close = content.find(']', open);
            std::string list = content.substr(open + 1, close - open - 1);
            for (char& c : list)
                if (c == ',') c = ' ';
            double t;
            std::istringstream is(list);
            while (is >> t) tols.push_back(t);
        }
        if (tols.empty()) {
            std::cerr << "error: no tolerances given and none found in manifest\n";
            return 1;
        }
    }

    for (const double tol : tols) {
        char* text = nullptr;
        const char* fmt = is_rank ? "csv" : "text";
        ldseds_status st =
            ldseds_rank_report(dir.c_str(), tol, alpha, metric.c_str(), fmt, &text);
        if (st != LDSEDS_OK) return fail(st);
        if (is_rank) {
            char name[96];
            std::snprintf(name, sizeof name, "%s/summary_%s_tol%g.csv", dir.c_str(),
                          metric.c_str(), tol);
            std::ofstream out(name);
            out << text;
            ldseds_string_destroy(text);
            char* jtext = nullptr;
            st = ldseds_rank_report(dir.c_str(), tol, alpha, metric.c_str(), "json", &jtext);
            if (st != LDSEDS_OK) return fail(st);
            std::snprintf(name, sizeof name, "%s/summary_%s_tol%g.json", dir.c_str(),
                          metric.c_str(), tol);
            std::ofstream jout(name);
            jout << jtext;
            ldseds_string_destroy(jtext);
            std::snprintf(name, sizeof name, "tol=%g: summaries written\n", tol);
            std::cout << name;
        } else {
            std::cout << "== metric " << metric << ", tolerance " << tol << " ==\n"
                      << text << "\n";
            ldseds_string_destroy(text);
        }
    }
    return 0;
}
