/*
 * srm — sequential relevance maximization solvers.
 *
 * C interface to the solver library: opaque handles, integer status codes.
 * Every function returning int yields SRM_OK on success or an SRM_ERR_*
 * code; srm_last_error() describes the most recent failure on the calling
 * thread. Strings returned through char** are heap-allocated and must be
 * released with srm_string_free().
 */

#ifndef SRM_H
#define SRM_H

#include <stdint.h>

#if defined(_WIN32)
#  define SRM_API __declspec(dllexport)
#else
#  define SRM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
    SRM_OK = 0,
    SRM_ERR_ARGUMENT = 2,     /* bad index, bad option, misuse */
    SRM_ERR_VALIDATION = 3,   /* malformed instance data */
    SRM_ERR_IO = 4,           /* file could not be read or written */
    SRM_ERR_INCONSISTENT = 5, /* zero-probability observation */
    SRM_ERR_INTERNAL = 6
};

enum {
    SRM_POLICY_OPTIMAL = 0,       /* exact, class-based dynamic program */
    SRM_POLICY_OPTIMAL_NAIVE = 1, /* exact, literal per-category recursion */
    SRM_POLICY_FARSIGHTED = 2,
    SRM_POLICY_NAIVE_GREEDY = 3,
    SRM_POLICY_ANTI_GREEDY = 4    /* worst-case probe: argmin greedy score */
};

typedef struct srm_instance srm_instance;
typedef struct srm_state srm_state;
typedef struct srm_report srm_report;
typedef struct srm_session srm_session;

SRM_API const char* srm_version(void);
SRM_API const char* srm_last_error(void);
SRM_API void srm_string_free(char* text);

/* ---- instances ------------------------------------------------------- */

/* JSON shape:
 * { "beta": 0.8,
 *   "categories": [{"name":"A","products":3}, ...],
 *   "types": [{"prior":0.25,"relevance":[1,0,1,0]}, ...] }
 */
SRM_API int srm_instance_parse(const char* json_text, srm_instance** out);
SRM_API int srm_instance_load(const char* path, srm_instance** out);
SRM_API int srm_instance_save(const srm_instance* inst, const char* path);
SRM_API int srm_instance_to_json(const srm_instance* inst, char** out_text);
SRM_API int srm_instance_with_beta(const srm_instance* inst, double beta, srm_instance** out);

/* Random instance: fair-coin relevance entries (all-zero rows resampled),
 * normalized uniform prior, category sizes uniform on 1..max_products. */
SRM_API int srm_instance_random(int n_types, int n_categories, double beta, int max_products,
                                uint64_t seed, srm_instance** out);
SRM_API void srm_instance_free(srm_instance* inst);

SRM_API int srm_instance_n_types(const srm_instance* inst);
SRM_API int srm_instance_n_categories(const srm_instance* inst);
SRM_API int srm_instance_total_products(const srm_instance* inst);
SRM_API double srm_instance_beta(const srm_instance* inst);
SRM_API const char* srm_instance_category_name(const srm_instance* inst, int category);
SRM_API int srm_instance_category_by_name(const srm_instance* inst, const char* name);

/* ---- information states ---------------------------------------------- */

SRM_API int srm_state_create(const srm_instance* inst, srm_state** out);
SRM_API int srm_state_clone(const srm_state* state, srm_state** out);
SRM_API void srm_state_free(srm_state* state);

/* Applies one observation in place: the category leaves the remaining set
 * and the surviving types are filtered by the feedback. */
SRM_API int srm_state_condition(const srm_instance* inst, srm_state* state, int category,
                                int feedback);
SRM_API int srm_state_num_surviving(const srm_state* state);
SRM_API int srm_state_num_remaining(const srm_state* state);
SRM_API int srm_state_has_type(const srm_state* state, int type);
SRM_API int srm_state_has_category(const srm_state* state, int category);
SRM_API int srm_relevance_probability(const srm_instance* inst, const srm_state* state,
                                      int category, double* out);

/* ---- solving and evaluation ------------------------------------------ */

SRM_API int srm_solve(const srm_instance* inst, int policy, srm_report** out);
SRM_API void srm_report_free(srm_report* report);
SRM_API double srm_report_value(const srm_report* report);
SRM_API int srm_report_action(const srm_report* report); /* category, -1 if none */
SRM_API int srm_report_render(const srm_report* report, int explain, char** out_text);

/* Exact expected payoff of the policy (equals srm_report_value). */
SRM_API int srm_evaluate(const srm_instance* inst, int policy, double* out_value);

/* Category the policy tests next from an arbitrary state; -1 when no
 * remaining category has positive relevance probability. */
SRM_API int srm_next_action(const srm_instance* inst, const srm_state* state, int policy,
                            int* out_category);

/* ---- interactive sessions -------------------------------------------- */

SRM_API int srm_session_start(const srm_instance* inst, int policy, srm_session** out);
SRM_API void srm_session_free(srm_session* session);
/* Next product to show. *out_category = -1 signals that nothing useful
 * remains. The recommendation is stable until srm_session_feed is called. */
SRM_API int srm_session_next(srm_session* session, int* out_category, int* out_ordinal);
SRM_API int srm_session_feed(srm_session* session, int feedback);
SRM_API int srm_session_payoff(const srm_session* session);
SRM_API int srm_session_shown(const srm_session* session);

/* ---- simulation ------------------------------------------------------- */

SRM_API int srm_simulate(const srm_instance* inst, int policy, long long runs, uint64_t seed,
                         int workers, double* out_mean, double* out_stderr);
/* Text dump of the session for one run index (one line per shown product). */
SRM_API int srm_simulate_trace(const srm_instance* inst, int policy, uint64_t seed,
                               uint64_t run_index, char** out_text);

/* ---- bounds ------------------------------------------------------------ */

SRM_API int srm_bound_farsighted(double beta, int l_min, int h, double* out);
SRM_API int srm_bound_naive(double beta, int l_min, int h, double* out);
SRM_API int srm_bound_universal(double beta, int l_total, double* out);
SRM_API int srm_full_information(const srm_instance* inst, double* out_discounted,
                                 double* out_cap);

/* ---- ratio sweep -------------------------------------------------------- */

typedef struct srm_sweep_config {
    int n_types;
    int n_categories;
    int samples;
    int max_products; /* <= 1 means every category holds one product */
    int threads;
    uint64_t seed;
    double beta_step; /* grid: 0, step, 2*step, ... while < beta_max + step/2 */
    double beta_max;
} srm_sweep_config;

/* Writes two CSV files: per-sample payoffs/ratios and per-beta aggregates. */
SRM_API int srm_sweep(const srm_sweep_config* config, const char* rows_csv_path,
                      const char* summary_csv_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SRM_H */
