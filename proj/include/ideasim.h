/* ideasim C API: deterministic simulator of group decision making as
 * evolution of a population of M-bit ideas.
 *
 * All functions return a status code (IDEASIM_OK on success); objects are
 * opaque handles released with their matching _free call. On failure,
 * ideasim_last_error() returns a thread-local description of what went
 * wrong. Handles are not thread-safe; use one per thread or synchronize
 * externally. Experiment functions fan out internally via `jobs` and
 * produce identical bytes for any jobs count.
 */
#ifndef IDEASIM_H
#define IDEASIM_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32
#define IDEASIM_API __declspec(dllexport)
#else
#define IDEASIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum ideasim_status {
    IDEASIM_OK = 0,
    IDEASIM_ERR_INVALID = 1, /* bad handle or argument */
    IDEASIM_ERR_CONFIG = 2,  /* invalid configuration value */
    IDEASIM_ERR_IO = 3,      /* filesystem failure */
    IDEASIM_ERR_PARSE = 4,   /* malformed input file */
    IDEASIM_ERR_LIMIT = 5,   /* resource guard tripped (enumeration cap) */
};

typedef struct ideasim_config ideasim_config;
typedef struct ideasim_result ideasim_result;

typedef struct ideasim_metrics {
    uint64_t most_supported;       /* encoding of the group decision */
    double decision_true_utility;  /* true utility of that decision */
    double entropy_bits;
    double convergence;            /* (M - H) / M */
    uint64_t distinct_types;
    uint64_t population_size;
    uint64_t events;               /* always N*T, skipped included */
    uint64_t skipped_events;
} ideasim_metrics;

IDEASIM_API const char* ideasim_version(void);

/* Thread-local message for the most recent failure on this thread. */
IDEASIM_API const char* ideasim_last_error(void);

/* --- configuration ------------------------------------------------- */

/* Fresh config with the built-in defaults (M=13 n=20 N=4 k=15 T=150,
 * rp=10 pm=0.1 rm=5 ps=0.5, nu=beta=0, seed=1, group=G0). */
IDEASIM_API ideasim_config* ideasim_config_new(void);
IDEASIM_API void ideasim_config_free(ideasim_config* cfg);

/* Keys: M n N k T nu beta rp pm rm ps seed group weights enum_cap. */
IDEASIM_API int ideasim_config_set(ideasim_config* cfg, const char* key, const char* value);

/* Overlays key=value lines from a file ('#' comments ignored). */
IDEASIM_API int ideasim_config_load(ideasim_config* cfg, const char* path);

/* Resolved config as key=value text into caller storage; *needed gets the
 * full length (terminator included) whether or not it fit. */
IDEASIM_API int ideasim_config_text(const ideasim_config* cfg, char* buf, size_t len,
                                    size_t* needed);

IDEASIM_API int ideasim_config_validate(const ideasim_config* cfg);

/* --- single simulation ---------------------------------------------- */

IDEASIM_API int ideasim_run(const ideasim_config* cfg, ideasim_result** out);
IDEASIM_API void ideasim_result_free(ideasim_result* result);

IDEASIM_API int ideasim_result_metrics(const ideasim_result* result, ideasim_metrics* out);

/* Writes metrics.csv, events.log and config.txt into out_dir (created if
 * missing). */
IDEASIM_API int ideasim_result_write(const ideasim_result* result, const char* out_dir);

/* Genealogy DOT export of the run's event log. */
IDEASIM_API int ideasim_result_write_dot(const ideasim_result* result, const char* path);

/* --- experiments ----------------------------------------------------- */

/* Heterogeneity/bias grid sweep: `replicates` runs per (nu, beta) cell.
 * NULL value lists mean the default grid 0,0.2,...,1.2. Writes raw.csv,
 * summary.csv and trends.csv into out_dir. */
IDEASIM_API int ideasim_sweep(const ideasim_config* base, const double* nu_values,
                              size_t nu_count, const double* beta_values, size_t beta_count,
                              int replicates, int jobs, const char* out_dir);

/* Behavioral-profile comparison: `replicates` runs per preset listed in
 * `groups` (comma-separated labels; NULL means G0..G7). Writes raw.csv,
 * summary.csv and comparisons.csv into out_dir. */
IDEASIM_API int ideasim_groups(const ideasim_config* base, const char* groups, int replicates,
                               int jobs, const char* out_dir);

/* Brute-force enumeration of the configured landscapes (true and master):
 * true_landscape.txt, master_landscape.txt, enumeration.csv, optimum.txt.
 * Fails with IDEASIM_ERR_LIMIT when M exceeds enum_cap. */
IDEASIM_API int ideasim_oracle(const ideasim_config* cfg, const char* out_dir);

/* Rebuilds the genealogy from an event-log file: genealogy.dot, stats.txt. */
IDEASIM_API int ideasim_genealogy(const char* log_path, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* IDEASIM_H */
