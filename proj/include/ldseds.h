/* C interface to the ldseds library: low-discrepancy sampling in the
 * expanded dimensional space for PSO-family optimizers, plus the benchmark
 * and rank-statistics machinery around it.
 *
 * All functions return LDSEDS_OK on success; on failure they return an
 * error code and leave a message retrievable with ldseds_last_error() (the
 * message is thread local). Objects handed out as pointers are opaque and
 * must be released with the matching _destroy function.
 */
#ifndef LDSEDS_H
#define LDSEDS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LDSEDS_API __declspec(dllexport)
#else
#define LDSEDS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ldseds_status {
    LDSEDS_OK = 0,
    LDSEDS_INVALID_ARGUMENT = 1,
    LDSEDS_RUNTIME_ERROR = 2,
    LDSEDS_IO_ERROR = 3,
    LDSEDS_NUMERIC_ERROR = 4
} ldseds_status;

LDSEDS_API const char* ldseds_version(void);

/* Message for the most recent failure on this thread; empty string if none. */
LDSEDS_API const char* ldseds_last_error(void);

/* ---- point sets ------------------------------------------------------- */

typedef struct ldseds_point_set ldseds_point_set;

/* generator: "halton" | "halton_scrambled" | "sobol" | "hua_wang" |
 * "uniform". seed scrambles/seeds where applicable; start_index is the
 * first sequence index emitted (pass UINT64_MAX for the generator's
 * conventional default). */
LDSEDS_API ldseds_status ldseds_point_set_create(const char* generator, int64_t n,
                                                 int32_t d, uint64_t seed,
                                                 uint64_t start_index,
                                                 ldseds_point_set** out);

/* Plain-text point file: one point per line, whitespace-separated
 * coordinates in [0,1). */
LDSEDS_API ldseds_status ldseds_point_set_load(const char* path, ldseds_point_set** out);

LDSEDS_API int64_t ldseds_point_set_rows(const ldseds_point_set* ps);
LDSEDS_API int32_t ldseds_point_set_cols(const ldseds_point_set* ps);

/* Copies the row-major n*d matrix into out (capacity in doubles). */
LDSEDS_API ldseds_status ldseds_point_set_copy(const ldseds_point_set* ps, double* out,
                                               size_t capacity);

LDSEDS_API ldseds_status ldseds_point_set_write(const ldseds_point_set* ps,
                                                const char* path);

LDSEDS_API void ldseds_point_set_destroy(ldseds_point_set* ps);

/* ---- dispersion ------------------------------------------------------- */

LDSEDS_API ldseds_status ldseds_dispersion_exact_1d(const double* values, int64_t count,
                                                    double* out);

LDSEDS_API ldseds_status ldseds_dispersion_mc(const ldseds_point_set* ps,
                                              int64_t probe_count, uint64_t probe_seed,
                                              double* out);

/* ---- epsilon streams --------------------------------------------------- */

typedef struct ldseds_stream ldseds_stream;

/* construction: "random" | "direct" | "combined"; mode: "pso" | "clpso".
 * permutation_seed is used by the combined construction only. */
LDSEDS_API ldseds_status ldseds_stream_create(const char* construction,
                                              const char* generator, const char* mode,
                                              int64_t n_particles, int32_t dim,
                                              int64_t horizon, uint64_t seed,
                                              uint64_t permutation_seed,
                                              uint64_t start_index,
                                              ldseds_stream** out);

/* Combined construction from an existing seed point set (e.g. a loaded
 * external set). */
LDSEDS_API ldseds_status ldseds_stream_create_from_seed_set(const ldseds_point_set* seed_set,
                                                            const char* mode,
                                                            int64_t horizon,
                                                            uint64_t permutation_seed,
                                                            ldseds_stream** out);

LDSEDS_API int64_t ldseds_stream_block_count(const ldseds_stream* s);

/* role: "init_position" | "init_velocity" | "cognitive" | "social" |
 * "learning"; g is the 1-based iteration for the per-iteration roles and
 * ignored otherwise. Copies the n*d block row-major into out. */
LDSEDS_API ldseds_status ldseds_stream_block(const ldseds_stream* s, const char* role,
                                             int64_t g, double* out, size_t capacity);

LDSEDS_API void ldseds_stream_destroy(ldseds_stream* s);

/* ---- rank statistics --------------------------------------------------- */

LDSEDS_API ldseds_status ldseds_friedman(const double* avg_ranks, int32_t k, int64_t m,
                                         double* chi_f, double* tau_f);

LDSEDS_API ldseds_status ldseds_f_critical(double alpha, int64_t df1, int64_t df2,
                                           double* out);

LDSEDS_API ldseds_status ldseds_nemenyi_cd(int32_t k, int64_t m, double alpha,
                                           double* out);

/* ---- experiments ------------------------------------------------------- */

/* Runs the experiment described by a JSON config file into out_dir. jobs <=
 * 0 uses the config's parallelism hint; master_seed_override >= 0 replaces
 * the config's master seed. */
LDSEDS_API ldseds_status ldseds_experiment_run(const char* config_path,
                                               const char* out_dir, int32_t jobs,
                                               int64_t master_seed_override);

/* Renders the function x algorithm rank table of a results directory.
 * metric: "cs" | "ct"; format: "text" | "csv" | "json". The returned string
 * must be released with ldseds_string_destroy. */
LDSEDS_API ldseds_status ldseds_rank_report(const char* results_dir, double tolerance,
                                            double alpha, const char* metric,
                                            const char* format, char** out_text);

/* Dispersion table over comma-separated sampler specs, e.g.
 * "random,direct:halton,combined:sobol". */
LDSEDS_API ldseds_status ldseds_dispersion_report(const char* samplers_csv,
                                                  const char* mode, int64_t n, int32_t d,
                                                  int64_t horizon, int64_t probe_count,
                                                  uint64_t seed, char** out_text);

LDSEDS_API void ldseds_string_destroy(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LDSEDS_H */
