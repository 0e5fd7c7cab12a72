#include "mcis/mcis.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "config_io.hpp"
#include "error.hpp"
#include "harness.hpp"
#include "model.hpp"
#include "report.hpp"
#include "verify.hpp"

struct mcis_config {
  mcis::NetworkConfig cfg;
};

struct mcis_trial {
  mcis::Trial trial;
};

struct mcis_sweep {
  mcis::SweepResult result;
};

namespace {

thread_local std::string last_error;

mcis_status status_of(mcis::Errc code) { return static_cast<mcis_status>(static_cast<int>(code) + 1); }

template <class F>
mcis_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return MCIS_OK;
  } catch (const mcis::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MCIS_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MCIS_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw mcis::Error(mcis::Errc::invalid_argument, std::string(what) + " must not be null");
}

char* duplicate(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

mcis::Format format_of(mcis_format f) {
  switch (f) {
    case MCIS_FORMAT_TEXT: return mcis::Format::Text;
    case MCIS_FORMAT_CSV: return mcis::Format::Csv;
    case MCIS_FORMAT_JSON: return mcis::Format::Json;
  }
  throw mcis::Error(mcis::Errc::invalid_argument, "unknown format");
}

mcis::Condition condition_of(mcis_condition c) {
  switch (c) {
    case MCIS_CONNECTIVITY: return mcis::Condition::Connectivity;
    case MCIS_INTERFERENCE: return mcis::Condition::Interference;
    case MCIS_DESTINATION_BOTTLENECK: return mcis::Condition::DestinationBottleneck;
    case MCIS_INTERFACE_BOTTLENECK: return mcis::Condition::InterfaceBottleneck;
  }
  throw mcis::Error(mcis::Errc::invalid_argument, "unknown condition");
}

mcis_classification to_c(const mcis::Classification& c) {
  mcis_classification out{};
  out.case_index = c.case_index;
  out.sub_case = c.sub_case;
  out.condition = static_cast<mcis_condition>(static_cast<int>(c.condition));
  out.F1 = c.thresholds.F1;
  out.F2 = c.thresholds.F2;
  out.G1 = c.thresholds.G1;
  out.G2 = c.thresholds.G2;
  out.G3 = c.thresholds.G3;
  return out;
}

mcis::Classification from_c(const mcis_classification& c) {
  mcis::Classification out;
  out.case_index = c.case_index;
  out.sub_case = c.sub_case;
  out.condition = condition_of(c.condition);
  out.thresholds = {c.F1, c.F2, c.G1, c.G2, c.G3};
  return out;
}

mcis_result to_c(const mcis::TrialResult& r) {
  mcis_result out{};
  out.trial = r.trial;
  out.seed = r.cfg.seed;
  out.lambda_min = r.lambda_min;
  out.lambda_mean = r.lambda_mean;
  out.T_A = r.T_A;
  out.T_I = r.T_I;
  out.D = r.D;
  out.adhoc_sources = r.adhoc_sources;
  out.max_dest_flows = r.max_dest_flows;
  out.max_lines_cell = r.max_lines_cell;
  out.edge_colors = r.edge_colors;
  out.vertex_colors = r.vertex_colors;
  out.unroutable = r.unroutable;
  out.feasible = r.feasible ? 1 : 0;
  out.range = r.range;
  out.grid_side = r.grid_side;
  std::strncpy(out.condition, r.condition.c_str(), sizeof out.condition - 1);
  return out;
}

std::optional<mcis::SpecialCase> preset_of(const char* name) {
  if (!name || !*name) return std::nullopt;
  const std::string s = name;
  if (s == "scah") return mcis::SpecialCase::SC_AH;
  if (s == "mcah") return mcis::SpecialCase::MC_AH;
  if (s == "scis") return mcis::SpecialCase::SC_IS;
  throw mcis::Error(mcis::Errc::invalid_argument, "unknown preset '" + s + "' (scah, mcah, scis)");
}

}  // namespace

extern "C" {

const char* mcis_version(void) { return "1.0.0"; }

const char* mcis_last_error(void) { return last_error.c_str(); }

const char* mcis_status_name(mcis_status status) {
  if (status == MCIS_OK) return "ok";
  if (status == MCIS_E_INTERNAL) return "internal";
  if (status > MCIS_OK && status < MCIS_E_INTERNAL) return mcis::errc_name(static_cast<mcis::Errc>(status - 1));
  return "unknown";
}

void mcis_free(void* p) { std::free(p); }

mcis_status mcis_config_create(mcis_config** out) {
  return guard([&] {
    require(out, "out");
    *out = new mcis_config{};
  });
}

void mcis_config_destroy(mcis_config* cfg) { delete cfg; }

mcis_status mcis_config_clone(const mcis_config* cfg, mcis_config** out) {
  return guard([&] {
    require(cfg, "cfg");
    require(out, "out");
    *out = new mcis_config{*cfg};
  });
}

mcis_status mcis_config_set(mcis_config* cfg, const char* key, const char* value) {
  return guard([&] {
    require(cfg, "cfg");
    require(key, "key");
    require(value, "value");
    mcis::apply_setting(cfg->cfg, key, value);
  });
}

mcis_status mcis_config_get(const mcis_config* cfg, const char* key, char** out) {
  return guard([&] {
    require(cfg, "cfg");
    require(key, "key");
    require(out, "out");
    *out = duplicate(mcis::format_setting(cfg->cfg, key));
  });
}

mcis_status mcis_config_load(mcis_config* cfg, const char* path) {
  return guard([&] {
    require(cfg, "cfg");
    require(path, "path");
    cfg->cfg = mcis::load_config_file(path, cfg->cfg);
  });
}

mcis_status mcis_config_validate(mcis_config* cfg) {
  return guard([&] {
    require(cfg, "cfg");
    cfg->cfg = mcis::validate_config(cfg->cfg);
  });
}

mcis_status mcis_config_render(const mcis_config* cfg, char** out) {
  return guard([&] {
    require(cfg, "cfg");
    require(out, "out");
    *out = duplicate(mcis::to_config_text(cfg->cfg));
  });
}

const char* mcis_config_keys(void) {
  static const std::string joined = [] {
    std::string s;
    for (const auto& k : mcis::config_keys()) s += k + "\n";
    return s;
  }();
  return joined.c_str();
}

mcis_status mcis_connectivity_radius(size_t n, double margin, double* out) {
  return guard([&] {
    require(out, "out");
    *out = mcis::connectivity_radius(n, margin);
  });
}

mcis_status mcis_cell_area(double n, int C_A, double H, double* out) {
  return guard([&] {
    require(out, "out");
    *out = mcis::cell_area(n, C_A, H);
  });
}

mcis_status mcis_expected_hops(int H, double* out) {
  return guard([&] {
    require(out, "out");
    *out = mcis::expected_hops(H);
  });
}

double mcis_prob_adhoc(double H, double r) { return mcis::prob_adhoc(H, r); }

mcis_status mcis_interfering_cell_bound(double delta, int* out) {
  return guard([&] {
    require(out, "out");
    *out = mcis::interfering_cell_bound(delta);
  });
}

double mcis_infra_capacity(size_t b, int m, int C_I, double W_I) { return mcis::infra_capacity(b, m, C_I, W_I); }

const char* mcis_condition_name(mcis_condition condition) {
  try {
    return mcis::condition_name(condition_of(condition));
  } catch (...) {
    return "unknown";
  }
}

mcis_status mcis_classify(double n, int C_A, double H, double scale, mcis_classification* out) {
  return guard([&] {
    require(out, "out");
    *out = to_c(mcis::classify_condition(n, C_A, H, scale));
  });
}

mcis_status mcis_classification_render(double n, int C_A, double H, const mcis_classification* cls,
                                       mcis_format format, char** out) {
  return guard([&] {
    require(cls, "cls");
    require(out, "out");
    const auto c = from_c(*cls);
    const auto table = mcis::classification_table(n, C_A, H, c);
    std::string text = mcis::render(table, format_of(format));
    if (format == MCIS_FORMAT_TEXT) text = mcis::classification_line(c) + "\n" + text;
    *out = duplicate(text);
  });
}

mcis_status mcis_bounds_evaluate(const mcis_config* cfg, mcis_bounds* out) {
  return guard([&] {
    require(cfg, "cfg");
    require(out, "out");
    const auto valid = mcis::validate_config(cfg->cfg);
    const auto r = mcis::evaluate_bounds(valid);
    *out = {to_c(r.cls), r.lambda_a, r.T_A, r.T_I, r.lambda, r.D, r.D_proposition};
  });
}

mcis_status mcis_bounds_render(const mcis_config* cfg, const mcis_bounds* bounds, mcis_format format, char** out) {
  return guard([&] {
    require(cfg, "cfg");
    require(bounds, "bounds");
    require(out, "out");
    mcis::BoundsReport r;
    r.cls = from_c(bounds->cls);
    r.lambda_a = bounds->lambda_a;
    r.T_A = bounds->T_A;
    r.T_I = bounds->T_I;
    r.lambda = bounds->lambda;
    r.D = bounds->D;
    r.D_proposition = bounds->D_proposition;
    std::string text = mcis::render(mcis::bounds_table(cfg->cfg, r), format_of(format));
    if (format == MCIS_FORMAT_TEXT) text = mcis::classification_line(r.cls) + "\n" + text;
    *out = duplicate(text);
  });
}

mcis_status mcis_topology_render(const mcis_config* cfg, mcis_grid grid, mcis_format format, char** out) {
  return guard([&] {
    require(cfg, "cfg");
    require(out, "out");
    const auto valid = mcis::validate_config(cfg->cfg);
    mcis::Topology topo;
    if (grid == MCIS_GRID_AREA) {
      const double a = mcis::cell_area(static_cast<double>(valid.n), valid.C_A, valid.H);
      topo = mcis::build_topology(valid, a);
    } else {
      topo = mcis::build_topology(valid, mcis::CellGrid(mcis::routing_grid_side(mcis::transmission_range(valid))));
    }
    *out = duplicate(mcis::render(mcis::topology_table(topo), format_of(format)));
  });
}

mcis_status mcis_simulate(const mcis_config* cfg, int saturated, mcis_trial** out) {
  return guard([&] {
    require(cfg, "cfg");
    require(out, "out");
    mcis::TrialOptions opts;
    opts.saturated = saturated != 0;
    auto* t = new mcis_trial{mcis::run_trial(cfg->cfg, 0, opts)};
    *out = t;
  });
}

void mcis_trial_destroy(mcis_trial* trial) { delete trial; }

mcis_status mcis_trial_result(const mcis_trial* trial, mcis_result* out) {
  return guard([&] {
    require(trial, "trial");
    require(out, "out");
    *out = to_c(trial->trial.result);
  });
}

mcis_status mcis_trial_render(const mcis_trial* trial, mcis_format format, char** out) {
  return guard([&] {
    require(trial, "trial");
    require(out, "out");
    *out = duplicate(mcis::render(mcis::results_table({trial->trial.result}), format_of(format)));
  });
}

mcis_status mcis_trial_render_flows(const mcis_trial* trial, mcis_format format, char** out) {
  return guard([&] {
    require(trial, "trial");
    require(out, "out");
    *out = duplicate(mcis::render(mcis::flows_table(trial->trial.flows), format_of(format)));
  });
}

mcis_status mcis_trial_render_schedule(const mcis_trial* trial, mcis_format format, char** out) {
  return guard([&] {
    require(trial, "trial");
    require(out, "out");
    const auto& t = trial->trial;
    *out = duplicate(mcis::render(mcis::schedule_table(t.schedule, t.flows.graph), format_of(format)));
  });
}

mcis_status mcis_trial_render_interference(const mcis_trial* trial, mcis_format format, char** out) {
  return guard([&] {
    require(trial, "trial");
    require(out, "out");
    const auto& t = trial->trial;
    std::vector<std::size_t> tx;
    for (std::size_t v = 0; v < t.schedule.node_color.size(); ++v) {
      if (t.schedule.node_color[v] != 0) tx.push_back(v);
    }
    const auto graph = mcis::build_interference_graph(t.topo, tx, t.result.range, t.result.cfg.delta);
    *out = duplicate(mcis::render(mcis::interference_table(graph.edges()), format_of(format)));
  });
}

mcis_status mcis_trial_render_topology(const mcis_trial* trial, mcis_format format, char** out) {
  return guard([&] {
    require(trial, "trial");
    require(out, "out");
    *out = duplicate(mcis::render(mcis::topology_table(trial->trial.topo), format_of(format)));
  });
}

mcis_status mcis_sweep_run(const mcis_config* base, const mcis_sweep_spec* spec, mcis_sweep** out) {
  return guard([&] {
    require(base, "base");
    require(spec, "spec");
    require(out, "out");
    mcis::SweepSpec s;
    s.base = base->cfg;
    if (spec->vary) s.vary = spec->vary;
    for (std::size_t i = 0; i < spec->value_count; ++i) {
      require(spec->values ? spec->values[i] : nullptr, "sweep value");
      s.values.emplace_back(spec->values[i]);
    }
    if (spec->seeds) s.seeds.assign(spec->seeds, spec->seeds + spec->seed_count);
    s.preset = preset_of(spec->preset);
    s.workers = spec->workers;
    s.options.saturated = spec->saturated != 0;
    *out = new mcis_sweep{mcis::sweep(s)};
  });
}

void mcis_sweep_destroy(mcis_sweep* sweep) { delete sweep; }

size_t mcis_sweep_row_count(const mcis_sweep* sweep) { return sweep ? sweep->result.rows.size() : 0; }

size_t mcis_sweep_failure_count(const mcis_sweep* sweep) { return sweep ? sweep->result.failures.size() : 0; }

mcis_status mcis_sweep_row(const mcis_sweep* sweep, size_t index, mcis_result* out) {
  return guard([&] {
    require(sweep, "sweep");
    require(out, "out");
    if (index >= sweep->result.rows.size()) throw mcis::Error(mcis::Errc::invalid_argument, "row index out of range");
    *out = to_c(sweep->result.rows[index]);
  });
}

mcis_status mcis_sweep_render(const mcis_sweep* sweep, mcis_format format, char** out) {
  return guard([&] {
    require(sweep, "sweep");
    require(out, "out");
    *out = duplicate(mcis::render(mcis::results_table(sweep->result.rows), format_of(format)));
  });
}

mcis_status mcis_sweep_render_failures(const mcis_sweep* sweep, mcis_format format, char** out) {
  return guard([&] {
    require(sweep, "sweep");
    require(out, "out");
    *out = duplicate(mcis::render(mcis::failures_table(sweep->result.failures), format_of(format)));
  });
}

mcis_status mcis_sweep_fit(const mcis_sweep* sweep, const char* column, mcis_fit* out) {
  return guard([&] {
    require(sweep, "sweep");
    require(column, "column");
    require(out, "out");
    const auto f = mcis::fit_scaling(mcis::mean_by_n(sweep->result.rows, column));
    *out = {f.slope, f.intercept, f.r2, f.points};
  });
}

mcis_status mcis_fit_scaling(const double* x, const double* y, size_t count, mcis_fit* out) {
  return guard([&] {
    require(out, "out");
    if (count > 0) {
      require(x, "x");
      require(y, "y");
    }
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < count; ++i) pts.emplace_back(x[i], y[i]);
    const auto f = mcis::fit_scaling(pts);
    *out = {f.slope, f.intercept, f.r2, f.points};
  });
}

mcis_status mcis_fit_render(const mcis_fit* fit, const char* column, mcis_format format, char** out) {
  return guard([&] {
    require(fit, "fit");
    require(out, "out");
    const mcis::Fit f{fit->slope, fit->intercept, fit->r2, fit->points};
    *out = duplicate(mcis::render(mcis::fit_table(f, column ? column : ""), format_of(format)));
  });
}

void mcis_verify_options_init(mcis_verify_options* opts) {
  if (!opts) return;
  const mcis::VerifyOptions defaults;
  *opts = {};
  opts->seed = defaults.seed;
  opts->scah_margin = defaults.scah_margin;
  opts->scah_seeds = defaults.scah_seeds;
  opts->workers = defaults.workers;
}

int mcis_check_count(void) { return mcis::kCheckCount; }

mcis_status mcis_verify(const mcis_verify_options* opts, int* all_passed) {
  return guard([&] {
    require(opts, "opts");
    mcis::VerifyOptions o;
    if (opts->only) o.only.assign(opts->only, opts->only + opts->only_count);
    for (int id : o.only) {
      if (id < 1 || id > mcis::kCheckCount) {
        throw mcis::Error(mcis::Errc::invalid_argument, "no check " + std::to_string(id));
      }
    }
    o.seed = opts->seed;
    o.scah_margin = opts->scah_margin;
    o.scah_seeds = opts->scah_seeds;
    o.workers = opts->workers;
    if (opts->on_result) {
      o.on_result = [opts](const mcis::CheckResult& r) {
        const mcis_check c{r.id, r.name.c_str(), r.pass ? 1 : 0, r.detail.c_str(), r.seconds};
        opts->on_result(&c, opts->user);
      };
    }
    bool ok = true;
    for (const auto& r : mcis::run_verification(o)) ok = ok && r.pass;
    if (all_passed) *all_passed = ok ? 1 : 0;
  });
}

mcis_status mcis_check_render(const mcis_check* check, mcis_format format, int with_header, char** out) {
  return guard([&] {
    require(check, "check");
    require(out, "out");
    const mcis::Table t{{"id", "name", "pass", "detail", "seconds"},
                        {{static_cast<std::int64_t>(check->id), std::string(check->name ? check->name : ""),
                          check->pass != 0, std::string(check->detail ? check->detail : ""), check->seconds}}};
    if (format == MCIS_FORMAT_TEXT) {
      std::string line = std::string(check->pass ? "PASS" : "FAIL") + "  " + std::to_string(check->id) + ". " +
                         (check->name ? check->name : "") + ": " + (check->detail ? check->detail : "") + "\n";
      *out = duplicate(line);
      return;
    }
    std::string text = mcis::render(t, format_of(format));
    if (format == MCIS_FORMAT_CSV && !with_header) text = text.substr(text.find('\n') + 1);
    *out = duplicate(text);
  });
}

}  // extern "C"
