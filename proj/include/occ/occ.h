/* C interface to the online correlation clustering library.
 *
 * Every function returns an occ_status. On failure, occ_last_error() returns
 * a message for the calling thread that stays valid until the next call on
 * that thread. Handles are opaque and owned by the caller; release them with
 * the matching *_free function. Strings returned through char** out
 * parameters are heap allocated and released with occ_string_free.
 */
#ifndef OCC_OCC_H
#define OCC_OCC_H

#include <stddef.h>
#include <stdint.h>

#if defined(OCC_BUILDING_LIBRARY)
#define OCC_API __attribute__((visibility("default")))
#else
#define OCC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum occ_status {
  OCC_OK = 0,
  OCC_ERR_INVALID_ARGUMENT = 1,
  OCC_ERR_PARSE = 2,
  OCC_ERR_CAPACITY = 3,
  OCC_ERR_INVARIANT = 4,
  OCC_ERR_IO = 5,
  OCC_ERR_INTERNAL = 6
} occ_status;

typedef struct occ_instance occ_instance;
typedef struct occ_config occ_config;
typedef struct occ_report occ_report;

OCC_API const char* occ_last_error(void);
OCC_API const char* occ_status_name(occ_status status);
OCC_API void occ_string_free(char* s);

/* Instances ------------------------------------------------------------- */

/* Generator by name with "key=value" parameters (see the README for the
 * families). `default_seed` fills a missing seed parameter. */
OCC_API occ_status occ_instance_generate(const char* name, const char* const* params,
                                         size_t param_count, uint64_t default_seed,
                                         occ_instance** out);
OCC_API occ_status occ_instance_parse(const char* text, size_t length, occ_instance** out);
/* As occ_instance_parse, but the descriptor names `source` (e.g. the path the
 * text was read from). */
OCC_API occ_status occ_instance_parse_named(const char* text, size_t length, const char* source,
                                            occ_instance** out);
OCC_API occ_status occ_instance_read_file(const char* path, occ_instance** out);
OCC_API occ_status occ_instance_write_file(const occ_instance* inst, const char* path);
OCC_API occ_status occ_instance_to_text(const occ_instance* inst, char** out);
/* Descriptor of a generated instance ("gen:..."), or "file:<path> fnv1a64=<hex>". */
OCC_API const char* occ_instance_descriptor(const occ_instance* inst);
OCC_API size_t occ_instance_size(const occ_instance* inst);
OCC_API size_t occ_instance_positive_count(const occ_instance* inst);
/* Sign of the edge between 1-based vertices i != j: 1 positive, 0 negative. */
OCC_API occ_status occ_instance_sign(const occ_instance* inst, size_t i, size_t j, int* out);
OCC_API void occ_instance_free(occ_instance* inst);

/* Configuration --------------------------------------------------------- */

/* Parses a key-value block (NULL or "" gives the defaults). */
OCC_API occ_status occ_config_parse(const char* text, occ_config** out);
OCC_API occ_status occ_config_read_file(const char* path, occ_config** out);
OCC_API void occ_config_set_seed(occ_config* config, uint64_t seed);
OCC_API void occ_config_set_exact_cap(occ_config* config, size_t cap);
OCC_API void occ_config_free(occ_config* config);

/* Runs ------------------------------------------------------------------ */

/* algorithm is "greedy", "dense" or "mixed". */
OCC_API occ_status occ_run(const occ_instance* inst, const char* algorithm, const occ_config* config,
                           occ_report** out);
/* Re-runs the instance, algorithm, seed and config embedded in a report. */
OCC_API occ_status occ_rerun_report_text(const char* text, size_t length, occ_report** out);

OCC_API occ_status occ_report_parse(const char* text, size_t length, occ_report** out);
OCC_API occ_status occ_report_to_text(const occ_report* report, char** out);
OCC_API int64_t occ_report_profit(const occ_report* report);
OCC_API int64_t occ_report_cost(const occ_report* report);
OCC_API int64_t occ_report_opt_profit(const occ_report* report);
OCC_API int64_t occ_report_opt_cost(const occ_report* report);
OCC_API int occ_report_opt_exact(const occ_report* report);
OCC_API double occ_report_ratio(const occ_report* report);
OCC_API double occ_report_cost_ratio(const occ_report* report);
/* "greedy" or "dense" for mixed runs, "-" otherwise. */
OCC_API const char* occ_report_branch(const occ_report* report);
OCC_API void occ_report_free(occ_report* report);

/* Verification, search and tables --------------------------------------- */

typedef struct occ_verify_options {
  size_t count;    /* corpus size, 0 = suite default */
  size_t max_n;    /* largest random instance, 0 = 9 */
  uint64_t seed;
  unsigned jobs;   /* 0 = hardware concurrency */
  size_t exact_cap; /* 0 = 12 */
} occ_verify_options;

/* Number of named suites and their names. */
OCC_API size_t occ_suite_count(void);
OCC_API const char* occ_suite_name(size_t index);

/* Runs one suite; *passed is 1 iff there were no violations. *summary gets a
 * human-readable summary, *counterexample the .occ text of the first
 * violating instance or NULL. */
OCC_API occ_status occ_verify(const char* suite, const occ_verify_options* options, int* passed,
                              char** summary, char** counterexample);

typedef struct occ_search_options {
  const char* algorithm; /* greedy | dense | mixed */
  size_t n;
  size_t trials;
  uint64_t seed;
  unsigned jobs;
  const char* objective; /* "profit" (default) or "cost" */
} occ_search_options;

/* Worst instance found, as a certified report; the instance is embedded. */
OCC_API occ_status occ_search(const occ_search_options* options, const occ_config* config,
                              occ_report** worst, occ_instance** instance);

OCC_API occ_status occ_sweep_two_clique(size_t m_max, const occ_config* config, char** table);
OCC_API occ_status occ_yao_experiment(size_t m, const occ_config* config, char** table);

/* CSV over every report file in dir; *warnings lists skipped files, one per
 * line (empty string if none). */
OCC_API occ_status occ_report_csv(const char* dir, char** csv, char** warnings);

/* Constants ------------------------------------------------------------- */

OCC_API occ_status occ_check_constants(double alpha, double tau, double eta, int* holds);
OCC_API occ_status occ_constants_bound(double alpha, double tau, double* bound);
OCC_API occ_status occ_recommended_p(double alpha, double eta, double* p);
OCC_API occ_status occ_mixed_ratio_excess(double alpha, double eta, double* excess);

#ifdef __cplusplus
}
#endif

#endif /* OCC_OCC_H */
