#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "config_io.hpp"
#include "error.hpp"

namespace mcis {

std::size_t routing_grid_side(double r) {
  if (!(r > 0.0)) throw Error(Errc::range, "range must be positive");
  const double g = std::ceil(std::sqrt(8.0) / r);
  return g < 1.0 ? 1 : static_cast<std::size_t>(g);
}

double adhoc_flow_rate(std::size_t E, std::size_t M, int C_A, double W_A) {
  if (E == 0 || M == 0 || C_A < 1) return 0.0;
  return W_A / (static_cast<double>(C_A) * static_cast<double>(E) * static_cast<double>(M));
}

Throughput measure_throughput(const Schedule& schedule, const FlowSet& flows, const NetworkConfig& cfg) {
  Throughput out;
  out.flow_rate.assign(flows.flows.size(), 0.0);

  const std::size_t cells = schedule.bs.active_slot.size();
  std::vector<std::size_t> up(cells, 0), down(cells, 0);
  for (const Flow& f : flows.flows) {
    if (f.mode != Mode::Infrastructure) continue;
    ++up[f.uplink_bs];
    ++down[f.downlink_bs];
  }
  const double cell_rate = schedule.bs.cell_rate;
  for (std::size_t c = 0; c < cells; ++c) {
    if (up[c] > 0) out.T_I += cell_rate;
  }

  const double adhoc = adhoc_flow_rate(schedule.E, schedule.M, cfg.C_A, cfg.W_A);
  double sum = 0.0;
  std::size_t routed = 0;
  bool first = true;
  for (const Flow& f : flows.flows) {
    if (!f.routed()) continue;
    double rate = 0.0;
    if (f.mode == Mode::AdHoc) {
      rate = adhoc;
      out.T_A += rate;
    } else {
      rate = std::min(cell_rate / static_cast<double>(up[f.uplink_bs]),
                      cell_rate / static_cast<double>(down[f.downlink_bs]));
    }
    out.flow_rate[f.id] = rate;
    sum += rate;
    ++routed;
    out.lambda_min = first ? rate : std::min(out.lambda_min, rate);
    first = false;
  }
  out.lambda_mean = routed ? sum / static_cast<double>(routed) : 0.0;
  return out;
}

namespace {

// Sojourn time of each packet, in arrival order.
std::vector<double> queue_sojourn(std::size_t packets, int servers, double service, bool saturated) {
  std::vector<double> out(packets);
  if (packets == 0) return out;
  // identical service times and FCFS: packet k takes the server packet k - s freed
  const auto s = static_cast<std::size_t>(servers);
  std::vector<double> free_at(s, 0.0);
  for (std::size_t k = 0; k < packets; ++k) {
    const double arrival = saturated ? 0.0 : static_cast<double>(k) / static_cast<double>(packets);
    double& server = free_at[k % s];
    const double start = std::max(arrival, server);
    server = start + service;
    out[k] = server - arrival;
  }
  return out;
}

}  // namespace

double deterministic_queue_delay(std::size_t packets, int servers, double service, bool saturated) {
  if (servers < 1) throw Error(Errc::invalid_argument, "queue needs at least one server");
  if (!(service > 0.0)) throw Error(Errc::invalid_argument, "service time must be positive");
  if (packets == 0) return 0.0;
  const auto times = queue_sojourn(packets, servers, service, saturated);
  double sum = 0.0;
  for (double t : times) sum += t;
  return sum / static_cast<double>(packets);
}

DelayStats measure_delay(const FlowSet& flows, const NetworkConfig& cfg, bool saturated) {
  DelayStats out;
  double total = 0.0, hops = 0.0, infra = 0.0;
  std::size_t count = 0, adhoc = 0, infra_count = 0;

  std::map<std::size_t, std::size_t> per_bs;
  for (const Flow& f : flows.flows) {
    if (f.mode == Mode::Infrastructure) ++per_bs[f.uplink_bs];
  }
  if (!per_bs.empty()) {
    const int servers = std::min(cfg.C_I, cfg.m);
    if (servers < 1) throw Error(Errc::domain, "infrastructure delay needs min(C_I, m) >= 1");
    for (auto [bs, packets] : per_bs) {
      for (double t : queue_sojourn(packets, servers, cfg.c_service, saturated)) infra += t;
      infra_count += packets;
    }
  }
  for (const Flow& f : flows.flows) {
    if (f.mode != Mode::AdHoc || !f.routed()) continue;
    hops += static_cast<double>(f.hops());
    ++adhoc;
  }
  total = hops * cfg.hop_time + infra;
  count = adhoc + infra_count;
  out.mean = count ? total / static_cast<double>(count) : 0.0;
  out.adhoc_hops = adhoc ? hops / static_cast<double>(adhoc) : 0.0;
  out.infra = infra_count ? infra / static_cast<double>(infra_count) : 0.0;
  return out;
}

Trial run_trial(const NetworkConfig& raw, std::size_t trial_id, const TrialOptions& opts) {
  const NetworkConfig cfg = validate_config(raw);
  const double r = transmission_range(cfg);

  Trial t;
  t.topo = build_topology(cfg, CellGrid(routing_grid_side(r)));
  t.flows = assign_flows(t.topo, cfg, r);
  t.schedule = build_adhoc_schedule(t.topo, t.flows, cfg, r);
  if (opts.audit) {
    t.audit = audit_schedule(t.schedule, t.topo, t.flows, cfg, r);
    if (!t.audit.ok()) throw Error(Errc::infeasible, "schedule audit failed: " + t.audit.first);
  }

  const Throughput tp = measure_throughput(t.schedule, t.flows, cfg);
  const DelayStats delay = measure_delay(t.flows, cfg, opts.saturated);
  const auto dest = destination_loads(t.flows.flows, cfg.n);
  const auto lines = count_lines_per_cell(t.flows.flows, t.topo);

  TrialResult& res = t.result;
  res.trial = trial_id;
  res.cfg = cfg;
  res.lambda_min = tp.lambda_min;
  res.lambda_mean = tp.lambda_mean;
  res.T_A = tp.T_A;
  res.T_I = tp.T_I;
  res.D = delay.mean;
  res.adhoc_sources = t.flows.adhoc_sources;
  res.max_dest_flows = dest.empty() ? 0 : *std::max_element(dest.begin(), dest.end());
  res.max_lines_cell = lines.empty() ? 0 : *std::max_element(lines.begin(), lines.end());
  res.edge_colors = t.schedule.E;
  res.vertex_colors = t.schedule.vertex_colors;
  try {
    res.condition = condition_name(classify_condition(static_cast<double>(cfg.n), cfg.C_A, cfg.H, cfg.threshold_scale).condition);
  } catch (const Error&) {
    res.condition = "undefined";
  }
  res.feasible = opts.audit;
  res.unroutable = t.flows.unroutable;
  res.range = r;
  res.grid_side = t.topo.cells.side();
  return t;
}

TrialResult run_trial_result(const NetworkConfig& cfg, std::size_t trial_id, const TrialOptions& opts) {
  return run_trial(cfg, trial_id, opts).result;
}

NetworkConfig preset_config(SpecialCase kind, const NetworkConfig& base) {
  NetworkConfig cfg = reduce_special_case(kind, base.n, base.W, base.C_A).cfg;
  cfg.seed = base.seed;
  cfg.r = base.r;
  cfg.margin = base.margin;
  cfg.delta = base.delta;
  cfg.c_service = base.c_service;
  cfg.hop_time = base.hop_time;
  cfg.threshold_scale = base.threshold_scale;
  cfg.enforce_connectivity = base.enforce_connectivity;
  return cfg;
}

SweepResult sweep(const SweepSpec& spec) {
  const std::vector<std::string> values = spec.vary.empty() ? std::vector<std::string>{""} : spec.values;
  if (!spec.vary.empty() && values.empty()) throw Error(Errc::invalid_argument, "sweep needs at least one value");
  const std::vector<std::uint64_t> seeds = spec.seeds.empty() ? std::vector<std::uint64_t>{spec.base.seed} : spec.seeds;

  // resolve every point up front so bad values fail before any work
  std::vector<NetworkConfig> points;
  for (const auto& v : values) {
    NetworkConfig cfg = spec.base;
    if (!spec.vary.empty()) apply_setting(cfg, spec.vary, v);
    if (spec.preset) cfg = preset_config(*spec.preset, cfg);
    points.push_back(cfg);
  }

  const std::size_t total = points.size() * seeds.size();
  std::vector<std::optional<TrialResult>> rows(total);
  std::vector<std::optional<std::string>> errors(total);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      NetworkConfig cfg = points[i / seeds.size()];
      cfg.seed = seeds[i % seeds.size()];
      try {
        rows[i] = run_trial_result(cfg, i, spec.options);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };

  unsigned workers = spec.workers ? spec.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SweepResult out;
  for (std::size_t i = 0; i < total; ++i) {
    if (rows[i]) {
      out.rows.push_back(std::move(*rows[i]));
    } else {
      out.failures.push_back({i, seeds[i % seeds.size()], values[i / seeds.size()], errors[i].value_or("unknown")});
    }
  }
  return out;
}

Fit fit_scaling(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw Error(Errc::invalid_argument, "fit needs at least 3 points");
  double sx = 0, sy = 0;
  for (auto [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) throw Error(Errc::invalid_argument, "fit needs positive values");
    sx += std::log(x);
    sy += std::log(y);
  }
  const double k = static_cast<double>(points.size());
  const double mx = sx / k, my = sy / k;
  double sxx = 0, sxy = 0, syy = 0;
  for (auto [x, y] : points) {
    const double dx = std::log(x) - mx, dy = std::log(y) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw Error(Errc::invalid_argument, "fit needs at least two distinct x values");
  Fit f;
  f.points = points.size();
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0.0;
  for (auto [x, y] : points) {
    const double e = std::log(y) - (f.intercept + f.slope * std::log(x));
    ss_res += e * e;
  }
  f.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return f;
}

double numeric_field(const TrialResult& row, std::string_view column) {
  const auto& c = row.cfg;
  if (column == "trial") return static_cast<double>(row.trial);
  if (column == "seed") return static_cast<double>(c.seed);
  if (column == "n") return static_cast<double>(c.n);
  if (column == "b") return static_cast<double>(c.b);
  if (column == "C_A") return c.C_A;
  if (column == "C_I") return c.C_I;
  if (column == "m") return c.m;
  if (column == "H") return c.H;
  if (column == "W_A") return c.W_A;
  if (column == "W_I") return c.W_I;
  if (column == "delta") return c.delta;
  if (column == "lambda_min") return row.lambda_min;
  if (column == "lambda_mean") return row.lambda_mean;
  if (column == "T_A") return row.T_A;
  if (column == "T_I") return row.T_I;
  if (column == "D") return row.D;
  if (column == "adhoc_sources") return static_cast<double>(row.adhoc_sources);
  if (column == "max_dest_flows") return static_cast<double>(row.max_dest_flows);
  if (column == "max_lines_cell") return static_cast<double>(row.max_lines_cell);
  if (column == "edge_colors") return static_cast<double>(row.edge_colors);
  if (column == "vertex_colors") return static_cast<double>(row.vertex_colors);
  throw Error(Errc::invalid_argument, "no numeric column '" + std::string(column) + "'");
}

std::vector<std::pair<double, double>> mean_by_n(const std::vector<TrialResult>& rows, const std::string& column) {
  std::map<std::size_t, std::pair<double, std::size_t>> acc;
  for (const auto& r : rows) {
    auto& [sum, count] = acc[r.cfg.n];
    sum += numeric_field(r, column);
    ++count;
  }
  std::vector<std::pair<double, double>> out;
  for (auto& [n, sc] : acc) out.emplace_back(static_cast<double>(n), sc.first / static_cast<double>(sc.second));
  return out;
}

}  // namespace mcis
