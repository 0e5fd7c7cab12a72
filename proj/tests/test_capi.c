/* Exercises the C interface from C. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "mcis/mcis.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

#define EXPECT_OK(call)                                                               \
  do {                                                                                \
    mcis_status s_ = (call);                                                          \
    if (s_ != MCIS_OK) {                                                              \
      fprintf(stderr, "%s:%d: %s -> %s: %s\n", __FILE__, __LINE__, #call,              \
              mcis_status_name(s_), mcis_last_error());                               \
      ++failures;                                                                     \
    }                                                                                 \
  } while (0)

static int near(double a, double b, double rel) { return fabs(a - b) <= rel * fabs(b); }

static void test_config(void) {
  mcis_config* cfg = NULL;
  mcis_config* copy = NULL;
  char* text = NULL;
  EXPECT_OK(mcis_config_create(&cfg));
  EXPECT_OK(mcis_config_set(cfg, "n", "250"));
  EXPECT_OK(mcis_config_get(cfg, "n", &text));
  EXPECT(text && strcmp(text, "250") == 0);
  mcis_free(text);

  EXPECT(mcis_config_set(cfg, "bogus", "1") == MCIS_E_INVALID_ARGUMENT);
  EXPECT(strstr(mcis_last_error(), "bogus") != NULL);
  EXPECT(mcis_config_set(cfg, "n", NULL) == MCIS_E_INVALID_ARGUMENT);
  EXPECT(mcis_config_load(cfg, "/nonexistent/missing.cfg") == MCIS_E_IO);

  EXPECT_OK(mcis_config_clone(cfg, &copy));
  EXPECT_OK(mcis_config_set(copy, "m", "3"));
  EXPECT(mcis_config_validate(copy) == MCIS_E_ODD_INTERFACES);
  EXPECT_OK(mcis_config_validate(cfg));
  EXPECT_OK(mcis_config_get(cfg, "b0", &text));
  EXPECT(text && strcmp(text, "2") == 0);
  mcis_free(text);

  EXPECT_OK(mcis_config_render(cfg, &text));
  EXPECT(text && strstr(text, "n = 250") != NULL);
  mcis_free(text);
  EXPECT(strstr(mcis_config_keys(), "threshold_scale") != NULL);

  mcis_config_destroy(copy);
  mcis_config_destroy(cfg);
  mcis_config_destroy(NULL);
}

static void test_closed_forms(void) {
  double v = 0.0;
  int k = 0;
  EXPECT_OK(mcis_connectivity_radius(100, 1.0, &v));
  EXPECT(near(v, 0.12107, 1e-4));
  EXPECT(mcis_connectivity_radius(100, 0.0, &v) == MCIS_E_RANGE);
  EXPECT_OK(mcis_cell_area(1e4, 1, 2, &v));
  EXPECT(near(v, 7.859e-5, 1e-3));
  EXPECT(mcis_cell_area(3, 1, 1, &v) == MCIS_E_DOMAIN);
  EXPECT_OK(mcis_expected_hops(10, &v));
  EXPECT(near(v, 7.15, 1e-12));
  EXPECT(near(mcis_prob_adhoc(2, 0.1), 0.125664, 1e-5));
  EXPECT_OK(mcis_interfering_cell_bound(1.0, &k));
  EXPECT(k == 16);
  EXPECT(mcis_interfering_cell_bound(0.0, &k) == MCIS_E_GUARD_ZONE);
  EXPECT(near(mcis_infra_capacity(9, 4, 8, 12), 54, 1e-12));
}

static void test_classify_and_bounds(void) {
  mcis_classification cls;
  mcis_config* cfg = NULL;
  mcis_bounds b;
  char* text = NULL;
  EXPECT_OK(mcis_classify(1e6, 100, 10, 1.0, &cls));
  EXPECT(cls.case_index == 2 && cls.sub_case == 3 && cls.condition == MCIS_INTERFACE_BOTTLENECK);
  EXPECT(strcmp(mcis_condition_name(MCIS_CONNECTIVITY), "Connectivity") == 0);
  EXPECT_OK(mcis_classification_render(1e6, 100, 10, &cls, MCIS_FORMAT_TEXT, &text));
  EXPECT(text && strncmp(text, "Case 2 / Sub-case 3 / InterfaceBottleneck\n", 42) == 0);
  mcis_free(text);
  EXPECT(mcis_classify(3, 1, 1, 1.0, &cls) == MCIS_E_DOMAIN);

  EXPECT_OK(mcis_config_create(&cfg));
  EXPECT_OK(mcis_config_set(cfg, "n", "1000000"));
  EXPECT_OK(mcis_config_set(cfg, "H", "10"));
  EXPECT_OK(mcis_config_set(cfg, "C", "6"));
  EXPECT_OK(mcis_config_set(cfg, "C_I", "4"));
  EXPECT_OK(mcis_config_set(cfg, "m", "4"));
  EXPECT_OK(mcis_bounds_evaluate(cfg, &b));
  EXPECT(near(b.D, 0.29232, 1e-4));
  EXPECT(b.D_proposition < b.D);
  EXPECT_OK(mcis_bounds_render(cfg, &b, MCIS_FORMAT_CSV, &text));
  EXPECT(text && strstr(text, "lambda_a") != NULL);
  mcis_free(text);
  mcis_config_destroy(cfg);
}

static void test_simulate(void) {
  mcis_config* cfg = NULL;
  mcis_trial* trial = NULL;
  mcis_result r;
  char* a = NULL;
  char* b = NULL;
  EXPECT_OK(mcis_config_create(&cfg));
  EXPECT_OK(mcis_config_set(cfg, "n", "400"));
  EXPECT_OK(mcis_config_set(cfg, "seed", "12"));
  EXPECT_OK(mcis_simulate(cfg, 0, &trial));
  EXPECT_OK(mcis_trial_result(trial, &r));
  EXPECT(r.feasible == 1);
  EXPECT(r.seed == 12);
  EXPECT(r.lambda_min > 0.0);
  EXPECT(strcmp(r.condition, "InterfaceBottleneck") == 0);
  EXPECT_OK(mcis_trial_render(trial, MCIS_FORMAT_CSV, &a));
  EXPECT(a && strncmp(a, "trial,seed,n,", 13) == 0);
  EXPECT_OK(mcis_trial_render_flows(trial, MCIS_FORMAT_CSV, &b));
  EXPECT(b && strncmp(b, "id,src,dst,mode,hops,length\n", 28) == 0);
  mcis_free(b);
  EXPECT_OK(mcis_trial_render_schedule(trial, MCIS_FORMAT_CSV, &b));
  EXPECT(b && strncmp(b, "node,eslot,mslot,channel,role,flow\n", 35) == 0);
  mcis_free(b);
  EXPECT_OK(mcis_trial_render_interference(trial, MCIS_FORMAT_JSON, &b));
  mcis_free(b);
  EXPECT_OK(mcis_trial_render_topology(trial, MCIS_FORMAT_CSV, &b));
  EXPECT(b && strncmp(b, "kind,x,y,cell,bscell\n", 21) == 0);
  mcis_free(b);
  mcis_trial_destroy(trial);

  /* same seed, same bytes */
  EXPECT_OK(mcis_simulate(cfg, 0, &trial));
  EXPECT_OK(mcis_trial_render(trial, MCIS_FORMAT_CSV, &b));
  EXPECT(a && b && strcmp(a, b) == 0);
  mcis_free(a);
  mcis_free(b);
  mcis_trial_destroy(trial);

  EXPECT_OK(mcis_config_set(cfg, "n", "1"));
  EXPECT(mcis_simulate(cfg, 0, &trial) == MCIS_E_NODE_COUNT);
  EXPECT(mcis_simulate(NULL, 0, &trial) == MCIS_E_INVALID_ARGUMENT);
  mcis_config_destroy(cfg);
}

static void test_sweep(void) {
  mcis_config* cfg = NULL;
  mcis_sweep* sw = NULL;
  mcis_sweep_spec spec;
  mcis_result r;
  mcis_fit fit;
  const char* values[] = {"200", "400", "800"};
  const uint64_t seeds[] = {1, 2};
  const double x[] = {4, 16, 64};
  const double y[] = {0.5, 0.25, 0.125};
  char* text = NULL;

  EXPECT_OK(mcis_config_create(&cfg));
  memset(&spec, 0, sizeof spec);
  spec.vary = "n";
  spec.values = values;
  spec.value_count = 3;
  spec.seeds = seeds;
  spec.seed_count = 2;
  spec.workers = 2;
  EXPECT_OK(mcis_sweep_run(cfg, &spec, &sw));
  EXPECT(mcis_sweep_row_count(sw) == 6);
  EXPECT(mcis_sweep_failure_count(sw) == 0);
  EXPECT_OK(mcis_sweep_row(sw, 5, &r));
  EXPECT(r.trial == 5 && r.seed == 2);
  EXPECT(mcis_sweep_row(sw, 6, &r) == MCIS_E_INVALID_ARGUMENT);
  EXPECT_OK(mcis_sweep_render(sw, MCIS_FORMAT_JSON, &text));
  EXPECT(text && strstr(text, "\"trial\":0") != NULL);
  mcis_free(text);
  EXPECT_OK(mcis_sweep_fit(sw, "adhoc_sources", &fit));
  EXPECT(fit.points == 3);
  EXPECT(mcis_sweep_fit(sw, "condition", &fit) == MCIS_E_INVALID_ARGUMENT);
  mcis_sweep_destroy(sw);

  spec.preset = "nope";
  EXPECT(mcis_sweep_run(cfg, &spec, &sw) == MCIS_E_INVALID_ARGUMENT);

  EXPECT_OK(mcis_fit_scaling(x, y, 3, &fit));
  EXPECT(near(fit.slope, -0.5, 1e-12));
  EXPECT_OK(mcis_fit_render(&fit, "y", MCIS_FORMAT_CSV, &text));
  mcis_free(text);
  EXPECT(mcis_fit_scaling(x, y, 2, &fit) == MCIS_E_INVALID_ARGUMENT);
  mcis_config_destroy(cfg);
}

static int seen = 0;
static void on_check(const mcis_check* c, void* user) {
  (void)user;
  EXPECT(c->id == 10);
  EXPECT(c->pass == 1);
  ++seen;
}

static void test_verify(void) {
  mcis_verify_options opts;
  const int only[] = {10};
  const int bad[] = {11};
  int all = 0;
  mcis_check c = {4, "coloring bounds", 1, "ok", 0.5};
  char* text = NULL;

  mcis_verify_options_init(&opts);
  EXPECT(opts.seed == 1);
  EXPECT(opts.scah_seeds > 0);
  EXPECT(mcis_check_count() == 10);
  opts.only = only;
  opts.only_count = 1;
  opts.on_result = on_check;
  EXPECT_OK(mcis_verify(&opts, &all));
  EXPECT(all == 1);
  EXPECT(seen == 1);

  opts.only = bad;
  EXPECT(mcis_verify(&opts, &all) == MCIS_E_INVALID_ARGUMENT);

  EXPECT_OK(mcis_check_render(&c, MCIS_FORMAT_TEXT, 1, &text));
  EXPECT(text && strcmp(text, "PASS  4. coloring bounds: ok\n") == 0);
  mcis_free(text);
  EXPECT_OK(mcis_check_render(&c, MCIS_FORMAT_CSV, 0, &text));
  EXPECT(text && strncmp(text, "4,coloring bounds,true,ok,", 26) == 0);
  mcis_free(text);
}

int main(void) {
  EXPECT(strlen(mcis_version()) > 0);
  EXPECT(strcmp(mcis_status_name(MCIS_E_DOMAIN), "domain") == 0);
  EXPECT(strcmp(mcis_status_name(MCIS_E_INTERNAL), "internal") == 0);
  test_config();
  test_closed_forms();
  test_classify_and_bounds();
  test_simulate();
  test_sweep();
  test_verify();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  puts("C API: all checks passed");
  return 0;
}
