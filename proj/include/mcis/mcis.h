/* C interface to the multi-channel infrastructure-support network toolkit.
 *
 * Every function returning mcis_status leaves a thread-local message for
 * mcis_last_error() on failure. Strings handed out through char** belong to
 * the caller and are released with mcis_free().
 */
#ifndef MCIS_MCIS_H
#define MCIS_MCIS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MCIS_BUILDING_LIBRARY)
#    define MCIS_API __declspec(dllexport)
#  else
#    define MCIS_API __declspec(dllimport)
#  endif
#else
#  define MCIS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcis_status {
  MCIS_OK = 0,
  MCIS_E_INVALID_ARGUMENT = 1,
  MCIS_E_CHANNEL_SPLIT = 2,
  MCIS_E_BANDWIDTH_SPLIT = 3,
  MCIS_E_ODD_INTERFACES = 4,
  MCIS_E_INTERFACE_COUNT = 5,
  MCIS_E_NON_SQUARE_BS = 6,
  MCIS_E_GUARD_ZONE = 7,
  MCIS_E_HOP_COUNT = 8,
  MCIS_E_NODE_COUNT = 9,
  MCIS_E_RANGE = 10,
  MCIS_E_DOMAIN = 11,
  MCIS_E_IO = 12,
  MCIS_E_INFEASIBLE = 13,
  MCIS_E_INTERNAL = 14
} mcis_status;

typedef enum mcis_format { MCIS_FORMAT_TEXT = 0, MCIS_FORMAT_CSV = 1, MCIS_FORMAT_JSON = 2 } mcis_format;

typedef enum mcis_condition {
  MCIS_CONNECTIVITY = 0,
  MCIS_INTERFERENCE = 1,
  MCIS_DESTINATION_BOTTLENECK = 2,
  MCIS_INTERFACE_BOTTLENECK = 3
} mcis_condition;

typedef enum mcis_grid { MCIS_GRID_ROUTING = 0, MCIS_GRID_AREA = 1 } mcis_grid;

typedef struct mcis_config mcis_config;
typedef struct mcis_trial mcis_trial;
typedef struct mcis_sweep mcis_sweep;

MCIS_API const char* mcis_version(void);
MCIS_API const char* mcis_last_error(void);
MCIS_API const char* mcis_status_name(mcis_status status);
MCIS_API void mcis_free(void* p);

/* config: flat key = value fields, see mcis_config_keys */
MCIS_API mcis_status mcis_config_create(mcis_config** out);
MCIS_API void mcis_config_destroy(mcis_config* cfg);
MCIS_API mcis_status mcis_config_clone(const mcis_config* cfg, mcis_config** out);
MCIS_API mcis_status mcis_config_set(mcis_config* cfg, const char* key, const char* value);
MCIS_API mcis_status mcis_config_get(const mcis_config* cfg, const char* key, char** out);
/* Reads a key = value file over the current values. */
MCIS_API mcis_status mcis_config_load(mcis_config* cfg, const char* path);
/* Checks every invariant; fills derived fields (b0) on success. */
MCIS_API mcis_status mcis_config_validate(mcis_config* cfg);
MCIS_API mcis_status mcis_config_render(const mcis_config* cfg, char** out);
/* Newline-separated key names. */
MCIS_API const char* mcis_config_keys(void);

/* closed forms */
MCIS_API mcis_status mcis_connectivity_radius(size_t n, double margin, double* out);
MCIS_API mcis_status mcis_cell_area(double n, int C_A, double H, double* out);
MCIS_API mcis_status mcis_expected_hops(int H, double* out);
MCIS_API double mcis_prob_adhoc(double H, double r);
MCIS_API mcis_status mcis_interfering_cell_bound(double delta, int* out);
MCIS_API double mcis_infra_capacity(size_t b, int m, int C_I, double W_I);

typedef struct mcis_classification {
  int case_index;
  int sub_case;
  mcis_condition condition;
  double F1, F2, G1, G2, G3;
} mcis_classification;

MCIS_API const char* mcis_condition_name(mcis_condition condition);
MCIS_API mcis_status mcis_classify(double n, int C_A, double H, double scale, mcis_classification* out);
/* text: "Case c / Sub-case s / Condition" followed by the thresholds */
MCIS_API mcis_status mcis_classification_render(double n, int C_A, double H, const mcis_classification* cls,
                                                mcis_format format, char** out);

typedef struct mcis_bounds {
  mcis_classification cls;
  double lambda_a;
  double T_A;
  double T_I;
  double lambda;
  double D;
  double D_proposition;
} mcis_bounds;

MCIS_API mcis_status mcis_bounds_evaluate(const mcis_config* cfg, mcis_bounds* out);
MCIS_API mcis_status mcis_bounds_render(const mcis_config* cfg, const mcis_bounds* bounds, mcis_format format,
                                        char** out);

/* Positions as kind,x,y,cell,bscell. */
MCIS_API mcis_status mcis_topology_render(const mcis_config* cfg, mcis_grid grid, mcis_format format, char** out);

typedef struct mcis_result {
  size_t trial;
  uint64_t seed;
  double lambda_min;
  double lambda_mean;
  double T_A;
  double T_I;
  double D;
  size_t adhoc_sources;
  size_t max_dest_flows;
  size_t max_lines_cell;
  size_t edge_colors;
  size_t vertex_colors;
  size_t unroutable;
  int feasible;
  double range;
  size_t grid_side;
  char condition[32];
} mcis_result;

/* One trial: topology, flows, schedule, audit, measurements. */
MCIS_API mcis_status mcis_simulate(const mcis_config* cfg, int saturated, mcis_trial** out);
MCIS_API void mcis_trial_destroy(mcis_trial* trial);
MCIS_API mcis_status mcis_trial_result(const mcis_trial* trial, mcis_result* out);
MCIS_API mcis_status mcis_trial_render(const mcis_trial* trial, mcis_format format, char** out);
MCIS_API mcis_status mcis_trial_render_flows(const mcis_trial* trial, mcis_format format, char** out);
MCIS_API mcis_status mcis_trial_render_schedule(const mcis_trial* trial, mcis_format format, char** out);
MCIS_API mcis_status mcis_trial_render_interference(const mcis_trial* trial, mcis_format format, char** out);
MCIS_API mcis_status mcis_trial_render_topology(const mcis_trial* trial, mcis_format format, char** out);

typedef struct mcis_sweep_spec {
  const char* vary;            /* config key, NULL for a single point */
  const char* const* values;
  size_t value_count;
  const uint64_t* seeds;       /* NULL: the config's seed */
  size_t seed_count;
  const char* preset;          /* NULL, "scah", "mcah" or "scis" */
  unsigned workers;            /* 0: hardware concurrency */
  int saturated;
} mcis_sweep_spec;

typedef struct mcis_fit {
  double slope;
  double intercept;
  double r2;
  size_t points;
} mcis_fit;

MCIS_API mcis_status mcis_sweep_run(const mcis_config* base, const mcis_sweep_spec* spec, mcis_sweep** out);
MCIS_API void mcis_sweep_destroy(mcis_sweep* sweep);
MCIS_API size_t mcis_sweep_row_count(const mcis_sweep* sweep);
MCIS_API size_t mcis_sweep_failure_count(const mcis_sweep* sweep);
MCIS_API mcis_status mcis_sweep_row(const mcis_sweep* sweep, size_t index, mcis_result* out);
MCIS_API mcis_status mcis_sweep_render(const mcis_sweep* sweep, mcis_format format, char** out);
MCIS_API mcis_status mcis_sweep_render_failures(const mcis_sweep* sweep, mcis_format format, char** out);
/* Log-log fit of a numeric column, averaged over seeds per n. */
MCIS_API mcis_status mcis_sweep_fit(const mcis_sweep* sweep, const char* column, mcis_fit* out);

MCIS_API mcis_status mcis_fit_scaling(const double* x, const double* y, size_t count, mcis_fit* out);
MCIS_API mcis_status mcis_fit_render(const mcis_fit* fit, const char* column, mcis_format format, char** out);

typedef struct mcis_check {
  int id;
  const char* name;
  int pass;
  const char* detail;
  double seconds;
} mcis_check;

typedef void (*mcis_check_callback)(const mcis_check* check, void* user);

typedef struct mcis_verify_options {
  const int* only;  /* NULL: all checks */
  size_t only_count;
  uint64_t seed;
  double scah_margin;
  size_t scah_seeds;
  unsigned workers;
  mcis_check_callback on_result;
  void* user;
} mcis_verify_options;

MCIS_API void mcis_verify_options_init(mcis_verify_options* opts);
MCIS_API int mcis_check_count(void);
/* Runs the checks in order, calling on_result after each. */
MCIS_API mcis_status mcis_verify(const mcis_verify_options* opts, int* all_passed);
/* One check as a table row; header included for csv/text when with_header. */
MCIS_API mcis_status mcis_check_render(const mcis_check* check, mcis_format format, int with_header, char** out);

#ifdef __cplusplus
}
#endif

#endif
