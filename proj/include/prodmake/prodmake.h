/* C interface to libprodmake.
 *
 * Sequences of exact rationals travel through opaque pm_seq handles; every
 * term is exposed as a decimal string "p" or "p/q". Functions return a
 * pm_status; on failure a thread-local message is available from
 * pm_last_error_message() and output handles are left untouched.
 */
#ifndef PRODMAKE_PRODMAKE_H
#define PRODMAKE_PRODMAKE_H

#include <stddef.h>

#if defined(_WIN32)
#define PM_API __declspec(dllexport)
#elif defined(__GNUC__)
#define PM_API __attribute__((visibility("default")))
#else
#define PM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pm_status {
    PM_OK = 0,
    PM_ERR_INVALID_ARGUMENT = 1,
    PM_ERR_PARSE = 2,
    PM_ERR_RESOURCE_LIMIT = 3,
    PM_ERR_CROSS_CHECK = 4,
    PM_ERR_NETWORK = 5,
    PM_ERR_INTERNAL = 6
} pm_status;

typedef enum pm_method { PM_METHOD_DIRECT = 0, PM_METHOD_RECURSIVE = 1, PM_METHOD_BOTH = 2 } pm_method;

typedef enum pm_format { PM_FORMAT_JSON = 0, PM_FORMAT_TABLE = 1 } pm_format;

/* Sequence of rationals indexed first_index, first_index + 1, ...
 * Series start at 0 (r(0) = 1), exponent sequences at 1. */
typedef struct pm_seq pm_seq;
typedef struct pm_report pm_report;
typedef struct pm_matches pm_matches;

PM_API const char *pm_version(void);
PM_API const char *pm_status_string(pm_status status);
PM_API const char *pm_last_error_message(void);
/* 0-based character offset of the last PM_ERR_PARSE, or -1. */
PM_API long pm_last_error_position(void);

/* Default partition-enumeration guard (largest n folded by direct formulas). */
PM_API size_t pm_default_partition_guard(void);

/* ---- sequences ---- */

PM_API pm_status pm_seq_from_strings(const char *const *terms, size_t count, size_t first_index, pm_seq **out);
/* Taylor coefficients c_0..c_order of a rational function in q. */
PM_API pm_status pm_series_from_expr(const char *expr, size_t order, pm_seq **out);
/* Family spec such as "overpartitions" or "kcolor:3": a_1..a_order. */
PM_API pm_status pm_family_exponents(const char *family, size_t order, pm_seq **out);
/* Family coefficients r(0)..r(order) (closed form or product expansion). */
PM_API pm_status pm_family_series(const char *family, size_t order, pm_seq **out);

PM_API size_t pm_seq_length(const pm_seq *seq);
PM_API size_t pm_seq_first_index(const pm_seq *seq);
/* Term at position i (0-based into the handle); NULL when out of range.
 * The string lives as long as the handle. */
PM_API const char *pm_seq_term(const pm_seq *seq, size_t i);
PM_API void pm_seq_free(pm_seq *seq);

/* ---- conversions ----
 * partition_guard bounds the direct (partition-sum) formulas; 0 selects
 * pm_default_partition_guard(). */

/* Series r(0..N) with r(0) = 1 -> exponents a_1..a_N. */
PM_API pm_status pm_prodmake(const pm_seq *series, pm_method method, size_t partition_guard, pm_seq **out);
/* Exponents a_1..a_N -> series r(0..N). */
PM_API pm_status pm_seriesmake(const pm_seq *exponents, pm_method method, size_t partition_guard, pm_seq **out);
/* Coefficients of r_q(n) by q-degree. */
PM_API pm_status pm_rq(const pm_seq *exponents, size_t n, size_t partition_guard, pm_seq **out);
/* *verified = 1 when the product side equals sum r_q(n) z^n through z^order. */
PM_API pm_status pm_verify_theorem3(const pm_seq *exponents, size_t order, size_t partition_guard, int *verified);

/* ---- OEIS ---- */

/* Offline mode uses the bundled fixtures and the cache directory only.
 * Cache, server and extra fixtures come from PRODMAKE_OEIS_CACHE,
 * PRODMAKE_OEIS_URL and PRODMAKE_OEIS_FIXTURES. */
PM_API pm_status pm_oeis_lookup(const pm_seq *terms, int offline, pm_matches **out);
PM_API size_t pm_matches_count(const pm_matches *m);
PM_API const char *pm_matches_id(const pm_matches *m, size_t i);
PM_API const char *pm_matches_name(const pm_matches *m, size_t i);
PM_API size_t pm_matches_length(const pm_matches *m, size_t i);
PM_API void pm_matches_free(pm_matches *m);

/* ---- command runner (what the CLI executes) ---- */

typedef struct pm_command_config {
    const char *command;       /* prodmake | seriesmake | qanalogue | verify */
    size_t order;
    int has_order;             /* 0: default order (20, or the list length) */
    const char *expr;          /* at most one input; NULL when unused */
    const char *coeffs;
    const char *exps;
    const char *family;
    pm_method method;
    pm_format format;
    int offline;
    int oeis;
    size_t max_partition_size;
    size_t q_terms;            /* 0 = all coefficients */
} pm_command_config;

PM_API void pm_command_config_init(pm_command_config *config);

/* Always yields a report when config and out are non-NULL; the status
 * mirrors the report's exit code (0 -> PM_OK). */
PM_API pm_status pm_run_command(const pm_command_config *config, pm_report **out);
/* 0 success, 2 usage or validation, 3 cross-check failure, 4 network. */
PM_API int pm_report_exit_code(const pm_report *report);
PM_API const char *pm_report_output(const pm_report *report);
PM_API const char *pm_report_errors(const pm_report *report);
PM_API void pm_report_free(pm_report *report);

#ifdef __cplusplus
}
#endif

#endif
