#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bounds.hpp"
#include "model.hpp"
#include "routing.hpp"
#include "scheduling.hpp"
#include "topology.hpp"

namespace mcis {

// Side of the routing grid for range r: the smallest g with r >= sqrt(8) / g,
// so a node can always reach any node of an adjacent cell.
std::size_t routing_grid_side(double r);

// W_A / (C_A E M): one mini-slot per edge-color slot on one channel.
double adhoc_flow_rate(std::size_t E, std::size_t M, int C_A, double W_A);

struct Throughput {
  std::vector<double> flow_rate;  // per flow, 0 for unroutable flows
  double lambda_min = 0.0;        // over routed flows
  double lambda_mean = 0.0;
  double T_A = 0.0;
  double T_I = 0.0;
};

// Ad hoc flows get adhoc_flow_rate; an infrastructure flow gets the smaller of
// its uplink and downlink cell's frame rate divided among that cell's flows.
Throughput measure_throughput(const Schedule& schedule, const FlowSet& flows, const NetworkConfig& cfg);

// FCFS queue with `servers` identical servers and deterministic `service`
// time. Arrivals are spread evenly over one second, or all at t = 0 when
// saturated. Returns the mean sojourn time (wait + service).
double deterministic_queue_delay(std::size_t packets, int servers, double service, bool saturated);

struct DelayStats {
  double mean = 0.0;        // seconds over all routed flows
  double adhoc_hops = 0.0;  // mean hop count of ad hoc flows
  double infra = 0.0;       // mean infrastructure delay
};

// Ad hoc packets take hops * hop_time; infrastructure packets queue at the
// uplink base station with min(C_I, m) servers.
DelayStats measure_delay(const FlowSet& flows, const NetworkConfig& cfg, bool saturated = false);

struct TrialResult {
  std::size_t trial = 0;
  NetworkConfig cfg;
  double lambda_min = 0.0;
  double lambda_mean = 0.0;
  double T_A = 0.0;
  double T_I = 0.0;
  double D = 0.0;
  std::size_t adhoc_sources = 0;
  std::size_t max_dest_flows = 0;
  std::size_t max_lines_cell = 0;
  std::size_t edge_colors = 0;
  std::size_t vertex_colors = 0;
  std::string condition;  // "undefined" when the regime formulas are out of domain
  bool feasible = false;
  std::size_t unroutable = 0;
  double range = 0.0;
  std::size_t grid_side = 0;
};

struct TrialOptions {
  bool saturated = false;
  bool audit = true;
};

// Everything a trial built, kept for dumps.
struct Trial {
  TrialResult result;
  Topology topo;
  FlowSet flows;
  Schedule schedule;
  AuditReport audit;
};

// topology -> flows -> schedule -> audit -> measurements. Throws
// Errc::infeasible when the audit fails.
Trial run_trial(const NetworkConfig& cfg, std::size_t trial_id = 0, const TrialOptions& opts = {});
TrialResult run_trial_result(const NetworkConfig& cfg, std::size_t trial_id = 0, const TrialOptions& opts = {});

// Reducing config of `kind` at base.n and base.W (MC-AH uses base.C_A
// channels); seed, range, margin, delta and timing fields are kept.
NetworkConfig preset_config(SpecialCase kind, const NetworkConfig& base);

struct SweepSpec {
  NetworkConfig base;
  std::string vary;                  // config key, empty for a single point
  std::vector<std::string> values;   // one point per value
  std::vector<std::uint64_t> seeds;  // empty: {base.seed}
  std::optional<SpecialCase> preset;
  unsigned workers = 0;              // 0: hardware concurrency
  TrialOptions options;
};

struct TrialFailure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string point;
  std::string message;
};

struct SweepResult {
  std::vector<TrialResult> rows;  // successful trials in trial order
  std::vector<TrialFailure> failures;
};

// One trial per (point, seed); trial id = point * |seeds| + seed index.
SweepResult sweep(const SweepSpec& spec);

struct Fit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;
};

// Least squares on (ln x, ln y). Needs >= 3 points and positive values.
Fit fit_scaling(const std::vector<std::pair<double, double>>& points);

// Value of a numeric results column by its header name.
double numeric_field(const TrialResult& row, std::string_view column);

// Means of a numeric result column grouped by n, in ascending n.
std::vector<std::pair<double, double>> mean_by_n(const std::vector<TrialResult>& rows, const std::string& column);

}  // namespace mcis
