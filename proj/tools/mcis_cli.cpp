// mcis: command line front end over the C interface.
//
// exit codes: 0 ok, 1 bad input (flags, config, files, failed verify),
// 2 runtime/domain failure.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mcis/mcis.h"

namespace {

struct Failure {
  mcis_status status;
  std::string message;
};

int exit_code(mcis_status s) {
  switch (s) {
    case MCIS_OK: return 0;
    case MCIS_E_DOMAIN:
    case MCIS_E_INFEASIBLE:
    case MCIS_E_INTERNAL: return 2;
    default: return 1;
  }
}

void check(mcis_status s, const std::string& context = {}) {
  if (s != MCIS_OK) throw Failure{s, context.empty() ? mcis_last_error() : context + ": " + mcis_last_error()};
}

std::string take(char* p) {
  std::string s = p ? p : "";
  mcis_free(p);
  return s;
}

using ConfigPtr = std::unique_ptr<mcis_config, decltype(&mcis_config_destroy)>;

struct Common {
  std::string config_path;
  std::string format = "text";
  std::string out_path;
  std::map<std::string, std::string> flags;  // config key -> raw value
};

// Config flags mirror the config keys; a few get short aliases.
const std::vector<std::pair<std::string, std::string>>& flag_names() {
  static const std::vector<std::pair<std::string, std::string>> names = {
      {"n", "--n"},
      {"b", "--b"},
      {"b0", "--b0"},
      {"C", "--C"},
      {"C_A", "--C_A,--ca"},
      {"C_I", "--C_I,--ci"},
      {"m", "--m"},
      {"W", "--W"},
      {"W_A", "--W_A,--wa"},
      {"W_I", "--W_I,--wi"},
      {"H", "--H,--hops"},
      {"delta", "--delta"},
      {"r", "--r"},
      {"seed", "--seed"},
      {"c_service", "--c_service"},
      {"threshold_scale", "--threshold_scale"},
      {"margin", "--margin"},
      {"enforce_connectivity", "--enforce_connectivity"},
      {"hop_time", "--hop_time"},
  };
  return names;
}

void add_common(CLI::App* app, Common& common) {
  app->add_option("--config", common.config_path, "key = value config file");
  app->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app->add_option("--out", common.out_path, "write output here instead of stdout");
  for (const auto& [key, names] : flag_names()) {
    app->add_option_function<std::string>(
        names, [&common, key = key](const std::string& v) { common.flags[key] = v; }, "config " + key);
  }
}

mcis_format format_of(const std::string& f) {
  if (f == "csv") return MCIS_FORMAT_CSV;
  if (f == "json") return MCIS_FORMAT_JSON;
  return MCIS_FORMAT_TEXT;
}

// defaults < MCIS_SEED < config file < flags
ConfigPtr build_config(const Common& common) {
  mcis_config* raw = nullptr;
  check(mcis_config_create(&raw));
  ConfigPtr cfg(raw, &mcis_config_destroy);
  if (const char* env = std::getenv("MCIS_SEED"); env && *env) check(mcis_config_set(cfg.get(), "seed", env), "MCIS_SEED");
  if (!common.config_path.empty()) check(mcis_config_load(cfg.get(), common.config_path.c_str()));
  for (const auto& [key, value] : common.flags) check(mcis_config_set(cfg.get(), key.c_str(), value.c_str()), "--" + key);
  return cfg;
}

void emit(const Common& common, const std::string& text) {
  if (common.out_path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(common.out_path, std::ios::binary);
  if (!out) throw Failure{MCIS_E_IO, "cannot open output file '" + common.out_path + "'"};
  out << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{MCIS_E_IO, "cannot open output file '" + path + "'"};
  out << text;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
T parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<T>(v);
  } catch (const std::exception&) {
    throw Failure{MCIS_E_INVALID_ARGUMENT, "invalid " + what + " '" + s + "'"};
  }
}

int run_classify(const Common& common) {
  auto cfg = build_config(common);
  auto get = [&](const char* key) { return take([&] { char* p = nullptr; check(mcis_config_get(cfg.get(), key, &p)); return p; }()); };
  const double n = std::stod(get("n"));
  const int C_A = std::stoi(get("C_A"));
  const double H = std::stod(get("H"));
  const double scale = std::stod(get("threshold_scale"));
  mcis_classification cls{};
  check(mcis_classify(n, C_A, H, scale, &cls));
  char* text = nullptr;
  check(mcis_classification_render(n, C_A, H, &cls, format_of(common.format), &text));
  emit(common, take(text));
  return 0;
}

int run_bounds(const Common& common) {
  auto cfg = build_config(common);
  check(mcis_config_validate(cfg.get()));
  mcis_bounds b{};
  check(mcis_bounds_evaluate(cfg.get(), &b));
  char* text = nullptr;
  check(mcis_bounds_render(cfg.get(), &b, format_of(common.format), &text));
  emit(common, take(text));
  return 0;
}

int run_topo(const Common& common, const std::string& grid) {
  auto cfg = build_config(common);
  char* text = nullptr;
  check(mcis_topology_render(cfg.get(), grid == "area" ? MCIS_GRID_AREA : MCIS_GRID_ROUTING, format_of(common.format), &text));
  emit(common, take(text));
  return 0;
}

struct SimulateArgs {
  bool saturated = false;
  std::string flows, schedule, interference, topology;
};

int run_simulate(const Common& common, const SimulateArgs& args) {
  auto cfg = build_config(common);
  mcis_trial* raw = nullptr;
  check(mcis_simulate(cfg.get(), args.saturated ? 1 : 0, &raw));
  std::unique_ptr<mcis_trial, decltype(&mcis_trial_destroy)> trial(raw, &mcis_trial_destroy);
  const mcis_format fmt = format_of(common.format);
  char* text = nullptr;
  auto dump = [&](const std::string& path, mcis_status (*render)(const mcis_trial*, mcis_format, char**)) {
    if (path.empty()) return;
    char* p = nullptr;
    check(render(trial.get(), fmt, &p));
    write_file(path, take(p));
  };
  dump(args.flows, &mcis_trial_render_flows);
  dump(args.schedule, &mcis_trial_render_schedule);
  dump(args.interference, &mcis_trial_render_interference);
  dump(args.topology, &mcis_trial_render_topology);
  check(mcis_trial_render(trial.get(), fmt, &text));
  emit(common, take(text));
  return 0;
}

struct SweepArgs {
  std::string vary;
  std::string values;
  std::string seeds;
  std::size_t trials = 0;
  std::string preset;
  unsigned workers = 0;
  std::string fit;
  std::string fit_out;
  bool saturated = false;
};

int run_sweep(const Common& common, const SweepArgs& args) {
  auto cfg = build_config(common);
  const auto values = split_list(args.values);
  std::vector<const char*> value_ptrs;
  for (const auto& v : values) value_ptrs.push_back(v.c_str());

  std::vector<std::uint64_t> seeds;
  for (const auto& s : split_list(args.seeds)) seeds.push_back(parse_number<std::uint64_t>(s, "seed"));
  if (seeds.empty() && args.trials > 0) {
    char* p = nullptr;
    check(mcis_config_get(cfg.get(), "seed", &p));
    const auto base = parse_number<std::uint64_t>(take(p), "seed");
    for (std::size_t i = 0; i < args.trials; ++i) seeds.push_back(base + i);
  }

  mcis_sweep_spec spec{};
  spec.vary = args.vary.empty() ? nullptr : args.vary.c_str();
  spec.values = value_ptrs.data();
  spec.value_count = value_ptrs.size();
  spec.seeds = seeds.empty() ? nullptr : seeds.data();
  spec.seed_count = seeds.size();
  spec.preset = args.preset.empty() ? nullptr : args.preset.c_str();
  spec.workers = args.workers;
  spec.saturated = args.saturated ? 1 : 0;

  mcis_sweep* raw = nullptr;
  check(mcis_sweep_run(cfg.get(), &spec, &raw));
  std::unique_ptr<mcis_sweep, decltype(&mcis_sweep_destroy)> sweep(raw, &mcis_sweep_destroy);

  const mcis_format fmt = format_of(common.format);
  char* text = nullptr;
  check(mcis_sweep_render(sweep.get(), fmt, &text));
  emit(common, take(text));

  if (mcis_sweep_failure_count(sweep.get()) > 0) {
    char* f = nullptr;
    check(mcis_sweep_render_failures(sweep.get(), MCIS_FORMAT_TEXT, &f));
    std::cerr << "failed trials:\n" << take(f);
  }
  if (!args.fit.empty()) {
    mcis_fit fit{};
    check(mcis_sweep_fit(sweep.get(), args.fit.c_str(), &fit), "fit");
    char* f = nullptr;
    check(mcis_fit_render(&fit, args.fit.c_str(), args.fit_out.empty() ? MCIS_FORMAT_TEXT : fmt, &f));
    if (args.fit_out.empty()) {
      std::cerr << take(f);
    } else {
      write_file(args.fit_out, take(f));
    }
  }
  return 0;
}

struct VerifyArgs {
  std::string only;
  std::uint64_t seed = 1;
  double scah_margin = 0.0;
  std::size_t scah_seeds = 0;
  unsigned workers = 0;
};

struct VerifySink {
  mcis_format format;
  std::ostream* out;
  bool header_done = false;
};

void on_check(const mcis_check* c, void* user) {
  auto* sink = static_cast<VerifySink*>(user);
  char* text = nullptr;
  if (mcis_check_render(c, sink->format, sink->header_done ? 0 : 1, &text) == MCIS_OK) {
    *sink->out << take(text) << std::flush;
    sink->header_done = true;
  }
}

int run_verify(const Common& common, const VerifyArgs& args) {
  std::vector<int> only;
  for (const auto& s : split_list(args.only)) only.push_back(parse_number<int>(s, "check id"));

  mcis_verify_options opts;
  mcis_verify_options_init(&opts);
  opts.only = only.empty() ? nullptr : only.data();
  opts.only_count = only.size();
  opts.seed = args.seed;
  if (args.scah_margin > 0.0) opts.scah_margin = args.scah_margin;
  if (args.scah_seeds > 0) opts.scah_seeds = args.scah_seeds;
  opts.workers = args.workers;

  std::ofstream file;
  if (!common.out_path.empty()) {
    file.open(common.out_path, std::ios::binary);
    if (!file) throw Failure{MCIS_E_IO, "cannot open output file '" + common.out_path + "'"};
  }
  VerifySink sink{format_of(common.format), common.out_path.empty() ? &std::cout : &file};
  opts.on_result = &on_check;
  opts.user = &sink;

  int all = 0;
  check(mcis_verify(&opts, &all));
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-channel wireless networks with infrastructure support: bounds, simulation, verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mcis_version());

  Common common;

  auto* classify = app.add_subcommand("classify", "dominating condition for (n, C_A, H)");
  add_common(classify, common);

  auto* bounds = app.add_subcommand("bounds", "evaluate every closed-form bound for a config");
  add_common(bounds, common);

  std::string grid = "routing";
  auto* topo = app.add_subcommand("topo", "dump node and base station positions");
  add_common(topo, common);
  topo->add_option("--grid", grid, "cell grid: routing (from r) or area (from a(n))")
      ->check(CLI::IsMember({"routing", "area"}));

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "run one trial");
  add_common(simulate, common);
  simulate->add_flag("--saturated", sim.saturated, "all infrastructure packets arrive at t = 0");
  simulate->add_option("--flows", sim.flows, "write flows here");
  simulate->add_option("--schedule", sim.schedule, "write schedule entries here");
  simulate->add_option("--edges", sim.interference, "write interference graph edges here");
  simulate->add_option("--topology", sim.topology, "write positions here");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "trials over a parameter grid and seeds");
  add_common(sweep, common);
  sweep->add_option("--vary", sw.vary, "config key to vary");
  sweep->add_option("--values", sw.values, "comma-separated values for --vary");
  auto* seeds_opt = sweep->add_option("--seeds", sw.seeds, "comma-separated seeds");
  sweep->add_option("--trials", sw.trials, "seeds seed .. seed + trials - 1")->excludes(seeds_opt);
  sweep->add_option("--preset", sw.preset, "reduce each point to a special case")
      ->check(CLI::IsMember({"scah", "mcah", "scis"}));
  sweep->add_option("--workers", sw.workers, "worker threads (default: all cores)");
  sweep->add_option("--fit", sw.fit, "fit a log-log slope of this column against n");
  sweep->add_option("--fit-out", sw.fit_out, "write the fit here instead of stderr");
  sweep->add_flag("--saturated", sw.saturated, "all infrastructure packets arrive at t = 0");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  verify->add_option("--out", common.out_path, "write results here instead of stdout");
  verify->add_option("--only", ver.only, "comma-separated check ids");
  verify->add_option("--seed", ver.seed, "base seed");
  verify->add_option("--scah-margin", ver.scah_margin, "connectivity margin for the SC-AH sweep");
  verify->add_option("--scah-seeds", ver.scah_seeds, "trials per n in the SC-AH sweep");
  verify->add_option("--workers", ver.workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*classify) return run_classify(common);
    if (*bounds) return run_bounds(common);
    if (*topo) return run_topo(common, grid);
    if (*simulate) return run_simulate(common, sim);
    if (*sweep) return run_sweep(common, sw);
    if (*verify) return run_verify(common, ver);
  } catch (const Failure& f) {
    std::cerr << "mcis: " << f.message << "\n";
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "mcis: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
