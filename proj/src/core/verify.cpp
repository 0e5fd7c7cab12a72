#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "bounds.hpp"
#include "coloring.hpp"
#include "error.hpp"
#include "harness.hpp"
#include "interference.hpp"
#include "rng.hpp"
#include "routing.hpp"
#include "scheduling.hpp"
#include "topology.hpp"

namespace mcis {
namespace {

template <class... Args>
std::string printf_string(const char* format, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

CheckResult make(int id, bool pass, std::string detail) {
  return {id, check_name(id), pass, std::move(detail), 0.0};
}

// Seed for check `id`, independent of the other checks.
std::uint64_t check_seed(const VerifyOptions& opts, int id) {
  return Rng::derive(opts.seed, 100 + static_cast<std::uint64_t>(id));
}

NetworkConfig with_channels(NetworkConfig cfg, int C_A, int C_I, int m, double W_A, double W_I) {
  cfg.C_A = C_A;
  cfg.C_I = C_I;
  cfg.C = C_A + C_I;
  cfg.m = m;
  cfg.W_A = W_A;
  cfg.W_I = W_I;
  cfg.W = W_A + 2.0 * W_I;
  return cfg;
}

}  // namespace

const char* check_name(int id) {
  switch (id) {
    case 1: return "hop-count law";
    case 2: return "schedule feasibility";
    case 3: return "interfering-cell constant";
    case 4: return "coloring bounds";
    case 5: return "BS frame exactness";
    case 6: return "SC-AH reduction";
    case 7: return "delay gain min(C_I, m)";
    case 8: return "concentration";
    case 9: return "destination flow maximum";
    case 10: return "classifier fixtures";
    default: return "unknown";
  }
}

CheckResult check_hop_count_law(const VerifyOptions& opts) {
  constexpr int H = 10;
  constexpr std::size_t samples = 1'000'000;
  Rng rng(check_seed(opts, 1));
  const double r = 1.0;
  const double reach = H * r;
  double sum = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    // uniform point of the radius-H r disk: distance is reach * sqrt(u)
    const double d = reach * std::sqrt(rng.uniform());
    sum += geometric_hops(d, r);
  }
  const double mean = sum / samples;
  const double law = expected_hops(H);
  const double err = std::abs(mean - 7.15) / 7.15;
  const bool pass = err <= 0.01 && std::abs(law - 7.15) < 1e-12;
  return make(1, pass, printf_string("H=10: mean %.5f over 1e6 samples, law %.5f, rel err %.3g%% (tol 1%%)", mean, law, 100 * err));
}

CheckResult check_schedule_feasibility(const VerifyOptions& opts) {
  Rng rng(check_seed(opts, 2));
  constexpr int configs = 120;
  const int channel_options[] = {1, 2, 4};
  const int hop_options[] = {1, 2, 4};
  const double delta_options[] = {0.5, 1.0, 2.0};
  const std::size_t bs_options[] = {1, 4, 9, 16};

  std::size_t violations = 0, errors = 0, hops = 0;
  std::string first;
  for (int k = 0; k < configs; ++k) {
    NetworkConfig cfg;
    cfg.n = 100 + rng.below(1901);
    cfg.H = hop_options[rng.below(3)];
    cfg.delta = delta_options[rng.below(3)];
    cfg.b = bs_options[rng.below(4)];
    cfg.b0 = 0;
    cfg.margin = 1.0 + 0.5 * static_cast<double>(rng.below(3));
    cfg.seed = rng.next();
    const int C_A = channel_options[rng.below(3)];
    // every fourth config is pure ad hoc so that long routes get scheduled too
    cfg = k % 4 == 3 ? with_channels(cfg, C_A, 0, 0, 4.0, 0.0) : with_channels(cfg, C_A, 2, 2, 2.0, 1.0);
    try {
      const NetworkConfig valid = validate_config(cfg);
      const double r = transmission_range(valid);
      const Topology topo = build_topology(valid, CellGrid(routing_grid_side(r)));
      const FlowSet flows = assign_flows(topo, valid, r);
      const Schedule s = build_adhoc_schedule(topo, flows, valid, r);
      const AuditReport audit = audit_schedule(s, topo, flows, valid, r);
      hops += flows.graph.edges.size();
      if (!audit.ok()) {
        violations += audit.half_duplex + audit.guard_zone + audit.unserved;
        if (first.empty()) first = audit.first;
      }
    } catch (const std::exception& e) {
      ++errors;
      if (first.empty()) first = e.what();
    }
  }
  std::string detail = printf_string("%d configs (n<=2000, C_A in {1,2,4}, H in {1,2,4}), %zu hops audited, %zu violations, %zu errors",
                                     configs, hops, violations, errors);
  if (!first.empty()) detail += "; first: " + first;
  return make(2, violations == 0 && errors == 0, detail);
}

CheckResult check_interfering_cells(const VerifyOptions& opts) {
  Rng rng(check_seed(opts, 3));
  const double deltas[] = {0.5, 1.0, 2.0};
  std::size_t worst[3] = {0, 0, 0};
  for (int k = 0; k < 50; ++k) {
    const CellGrid grid(5 + rng.below(56));
    for (int d = 0; d < 3; ++d) {
      for (std::size_t c = 0; c < grid.cell_count(); ++c) {
        worst[d] = std::max(worst[d], interfering_cells(c, grid, deltas[d]).size());
      }
    }
  }
  bool pass = true;
  std::string detail = "50 grids, max cells in the guard disk (self included) vs bound:";
  for (int d = 0; d < 3; ++d) {
    const int bound = interfering_cell_bound(deltas[d]);
    pass = pass && worst[d] <= static_cast<std::size_t>(bound);
    detail += printf_string(" delta=%g: %zu/%d%s", deltas[d], worst[d], bound,
                            worst[d] <= static_cast<std::size_t>(bound) ? "" : " (exceeds)");
  }
  return make(3, pass, detail);
}

CheckResult check_coloring_bounds(const VerifyOptions& opts) {
  Rng rng(check_seed(opts, 4));
  std::size_t bad_vertex = 0, bad_edge = 0, instances = 0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 5 + rng.below(296);
    // vertex coloring: alternate random and geometric graphs
    if (k % 2 == 0) {
      AdjacencyGraph g(n);
      const double p = 0.01 + 0.5 * rng.uniform();
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (rng.uniform() < p) g.add_edge(u, v);
        }
      }
      const auto color = greedy_vertex_color(g);
      if (!is_proper_vertex_coloring(g, color) || color_count(color) > g.max_degree() + 1) ++bad_vertex;
    } else {
      std::vector<Point> pts(n);
      for (auto& p : pts) p = {rng.uniform(), rng.uniform()};
      std::vector<std::size_t> ids(n);
      for (std::size_t i = 0; i < n; ++i) ids[i] = i;
      const InterferenceGraph g(pts, ids, 0.02 + 0.2 * rng.uniform());
      const auto color = greedy_vertex_color(g);
      if (!is_proper_vertex_coloring(g, color) || color_count(color) > g.max_degree() + 1) ++bad_vertex;
    }
    // edge coloring on a random multigraph
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    const std::size_t m = rng.below(4 * n + 1);
    for (std::size_t e = 0; e < m; ++e) {
      const std::size_t a = rng.below(n);
      std::size_t b = rng.below(n - 1);
      if (b >= a) ++b;
      edges.emplace_back(a, b);
    }
    const auto ecolor = greedy_edge_color(n, edges);
    const std::size_t d = max_degree(n, edges);
    const std::size_t limit = d == 0 ? 0 : 2 * d - 1;
    if (!is_proper_edge_coloring(n, edges, ecolor) || color_count(ecolor) > limit) ++bad_edge;
    ++instances;
  }
  return make(4, bad_vertex == 0 && bad_edge == 0,
              printf_string("%zu graphs: %zu vertex-coloring and %zu edge-coloring bound/properness failures", instances,
                            bad_vertex, bad_edge));
}

CheckResult check_sigma1_exactness(const VerifyOptions& opts) {
  Rng rng(check_seed(opts, 5));
  struct Case {
    std::size_t b;
    int C_I, m;
    double W_I, delta;
  };
  const Case cases[] = {{1, 1, 2, 17.0, 1.0},  {4, 2, 2, 3.0, 1.0},  {9, 4, 4, 12.0, 0.5}, {16, 8, 4, 16.0, 1.0},
                        {25, 6, 2, 5.0, 2.0},  {36, 3, 4, 7.5, 1.5}, {49, 5, 2, 2.0, 0.5}, {64, 2, 6, 1.0, 1.0},
                        {100, 12, 4, 9.0, 0.25}};
  double worst = 0.0;
  std::size_t runs = 0;
  std::string note;
  for (const auto& c : cases) {
    NetworkConfig cfg = with_channels(NetworkConfig{}, 1, c.C_I, c.m, 1.0, c.W_I);
    cfg.n = 3000;
    cfg.H = 1;
    cfg.b = c.b;
    cfg.b0 = 0;
    cfg.delta = c.delta;
    cfg.seed = rng.next();
    const NetworkConfig valid = validate_config(cfg);
    const TrialResult res = run_trial_result(valid);
    const int k8 = BoundsConstants::from(valid).k8;
    const double share = c.C_I <= c.m ? 1.0 : static_cast<double>(c.m) / c.C_I;
    const double expected = static_cast<double>(c.b) * share * c.W_I / (k8 + 1);
    const double err = std::abs(res.T_I - expected) / expected;
    worst = std::max(worst, err);
    ++runs;
    if (err > 1e-9 && note.empty()) note = printf_string("; b=%zu: measured %.10g vs %.10g", c.b, res.T_I, expected);
  }
  // per-cell worked values
  const double one = build_bs_schedule_sigma1(1, 16, 1, 2, 17.0).cell_rate;
  const double two = build_bs_schedule_sigma1(1, 16, 8, 4, 16.0).cell_rate;
  const bool cells_ok = std::abs(one - 1.0) < 1e-12 && std::abs(two - 8.0 / 17.0) < 1e-12;
  return make(5, worst <= 1e-9 && cells_ok,
              printf_string("%zu configs, max rel err %.3g (tol 1e-9); per-cell k8=16: %.6g and %.6g", runs, worst, one, two) +
                  note);
}

CheckResult check_scah_reduction(const VerifyOptions& opts) {
  // evaluated bound at the integer hop limit vs the reference order
  double lo = 1e300, hi = 0.0;
  std::string ratios;
  for (double n : {1e4, 1e5, 1e6}) {
    const double H = std::ceil(std::sqrt(n / std::log(n)));
    const double bound = adhoc_per_node_bound(Condition::Connectivity, n, H, 1, 1.0);
    const double ratio = bound / (1.0 / std::sqrt(n * std::log(n)));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    ratios += printf_string(" %.4f", ratio);
  }
  const bool ratio_ok = hi / lo <= 1.10;

  SweepSpec spec;
  spec.base.W = 1.0;
  spec.base.margin = opts.scah_margin;
  spec.vary = "n";
  for (int e = 12; e <= 16; ++e) spec.values.push_back(std::to_string(1u << e));
  for (std::size_t s = 0; s < opts.scah_seeds; ++s) spec.seeds.push_back(Rng::derive(check_seed(opts, 6), s));
  spec.preset = SpecialCase::SC_AH;
  spec.workers = opts.workers;
  const SweepResult res = sweep(spec);

  std::string detail = "bound/(W/sqrt(n ln n)) at n=1e4,1e5,1e6:" + ratios + printf_string(" (spread %.4f, tol 1.10)", hi / lo);
  bool slope_ok = false;
  if (!res.failures.empty()) {
    detail += printf_string("; %zu sweep trials failed: %s", res.failures.size(), res.failures.front().message.c_str());
  } else {
    const Fit fit = fit_scaling(mean_by_n(res.rows, "lambda_min"));
    slope_ok = fit.slope >= -0.65 && fit.slope <= -0.45;
    std::size_t unroutable = 0;
    for (const auto& r : res.rows) unroutable += r.unroutable;
    detail += printf_string("; measured lambda_min slope %.4f over n=2^12..2^16 (R2 %.4f, margin %g, %zu unroutable flows)",
                            fit.slope, fit.r2, opts.scah_margin, unroutable);
  }
  return make(6, ratio_ok && slope_ok, detail);
}

CheckResult check_delay_gain(const VerifyOptions& opts) {
  NetworkConfig base;
  base.n = 2000;
  base.b = 1;
  base.b0 = 0;
  base.H = 1;
  base.seed = check_seed(opts, 7);
  // m has to be even, so the single-server side runs C_I = 1, m = 2: same min(C_I, m)
  auto infra_delay = [&](int servers) {
    const NetworkConfig cfg = validate_config(with_channels(base, 1, servers, std::max(servers, 2), 1.0, 1.0));
    const double r = transmission_range(cfg);
    const Topology topo = build_topology(cfg, CellGrid(routing_grid_side(r)));
    const FlowSet flows = assign_flows(topo, cfg, r);
    return measure_delay(flows, cfg, true).infra;
  };
  const double four = infra_delay(4), one = infra_delay(1);
  const double ratio = four / one;

  NetworkConfig cor = with_channels(NetworkConfig{}, 1, 4, 4, 1.0, 1.0);
  cor.n = 1'000'000;
  cor.H = 10;
  cor.c_service = 1.0;
  const double D = average_delay(cor);
  const bool pass = std::abs(ratio - 0.25) <= 0.05 && std::abs(D - 0.29232) <= 1e-4;
  return make(7, pass, printf_string("saturated BS delay %.4f (4 servers) / %.4f (1 server) = %.4f (0.25 +- 0.05); formula D = %.6f (0.29232 +- 1e-4)",
                                     four, one, ratio, D));
}

CheckResult check_concentration(const VerifyOptions& opts) {
  // ad hoc sources at n = 1e5 with r^2 = ln n / n, the radius the pi H^2 ln n count assumes
  constexpr std::size_t n = 100'000;
  constexpr int H = 3;
  const double nn = static_cast<double>(n);
  const double target = std::numbers::pi * H * H * std::log(nn);
  std::size_t inside = 0;
  double mean = 0.0;
  for (std::size_t s = 0; s < 100; ++s) {
    NetworkConfig cfg = with_channels(NetworkConfig{}, 1, 1, 2, 2.0, 1.0);
    cfg.n = n;
    cfg.H = H;
    cfg.b = 1;
    cfg.b0 = 0;
    cfg.margin = std::sqrt(std::numbers::pi);
    cfg.seed = Rng::derive(check_seed(opts, 8), s);
    const NetworkConfig valid = validate_config(cfg);
    const double r = transmission_range(valid);
    const Topology topo = build_topology(valid, CellGrid(routing_grid_side(r)));
    const FlowSet flows = assign_flows(topo, valid, r);
    const double count = static_cast<double>(flows.adhoc_sources);
    mean += count / 100.0;
    if (std::abs(count - target) <= 0.2 * target) ++inside;
  }
  const bool sources_ok = inside >= 95;

  // cell occupancy with a(n) = 2 * 50 ln n / n
  std::string occ;
  bool cells_ok = true;
  for (std::size_t cells_n : {std::size_t{10'000}, std::size_t{100'000}}) {
    const double cn = static_cast<double>(cells_n);
    const double a = 2.0 * 50.0 * std::log(cn) / cn;
    const CellGrid grid = CellGrid::from_area(a);
    const double expect = cn * grid.cell_area();
    std::size_t good = 0, ratio_good = 0;
    for (std::size_t s = 0; s < 100; ++s) {
      const auto pts = place_nodes(cells_n, Rng::derive(check_seed(opts, 8), 1000 + s));
      std::vector<std::size_t> hist(grid.cell_count(), 0);
      for (const auto& p : pts) ++hist[grid.cell_of(p)];
      const auto [mn, mx] = std::minmax_element(hist.begin(), hist.end());
      if (static_cast<double>(*mn) >= 0.25 * expect && static_cast<double>(*mx) <= 4.0 * expect) ++good;
      if (*mn > 0 && static_cast<double>(*mx) <= 4.0 * static_cast<double>(*mn)) ++ratio_good;
    }
    cells_ok = cells_ok && good >= 95 && ratio_good >= 95;
    occ += printf_string(" n=%zu: %zu/100 seeds in band, %zu/100 max/min<=4;", cells_n, good, ratio_good);
  }
  occ.pop_back();
  return make(8, sources_ok && cells_ok,
              printf_string("ad hoc sources at n=1e5, H=3: %zu/100 seeds within 20%% of %.1f (mean %.1f); occupancy:", inside,
                            target, mean) +
                  occ);
}

CheckResult check_destination_maximum(const VerifyOptions& opts) {
  Rng rng(check_seed(opts, 9));
  struct Size {
    std::size_t N;
    int reps;
  };
  const Size points[] = {{1000, 400}, {100'000, 20}};
  double ratio[2];
  std::string detail;
  for (int i = 0; i < 2; ++i) {
    double sum = 0.0;
    for (int k = 0; k < points[i].reps; ++k) {
      sum += static_cast<double>(balls_into_bins_max(points[i].N, points[i].N, rng));
    }
    const double lnN = std::log(static_cast<double>(points[i].N));
    const double mean = sum / points[i].reps;
    ratio[i] = mean / (lnN / std::log(lnN));
    detail += printf_string("N=%zu: mean max %.3f, ratio %.4f; ", points[i].N, mean, ratio[i]);
  }
  const double spread = std::max(ratio[0], ratio[1]) / std::min(ratio[0], ratio[1]);
  detail += printf_string("spread %.4f (tol < 2)", spread);
  return make(9, spread < 2.0, detail);
}

CheckResult check_classifier_fixtures(const VerifyOptions&) {
  struct Fixture {
    double n;
    int C_A;
    int H;
    int case_index, sub_case;
    Condition condition;
  };
  const Fixture fixtures[] = {{1e6, 4, 5, 1, 1, Condition::InterfaceBottleneck},
                              {1e6, 4, 50, 1, 2, Condition::Connectivity},
                              {1e6, 100, 10, 2, 3, Condition::InterfaceBottleneck}};
  int ok = 0;
  std::string detail;
  for (const auto& f : fixtures) {
    const Classification c = classify_condition(f.n, f.C_A, f.H);
    const bool match = c.case_index == f.case_index && c.sub_case == f.sub_case && c.condition == f.condition;
    ok += match;
    detail += printf_string("(C_A=%d, H=%d) -> Case %d / Sub-case %d / %s%s; ", f.C_A, f.H, c.case_index, c.sub_case,
                            condition_name(c.condition), match ? "" : " MISMATCH");
  }
  detail += printf_string("%d/3 match", ok);
  return make(10, ok == 3, detail);
}

CheckResult run_check(int id, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult res;
  try {
    switch (id) {
      case 1: res = check_hop_count_law(opts); break;
      case 2: res = check_schedule_feasibility(opts); break;
      case 3: res = check_interfering_cells(opts); break;
      case 4: res = check_coloring_bounds(opts); break;
      case 5: res = check_sigma1_exactness(opts); break;
      case 6: res = check_scah_reduction(opts); break;
      case 7: res = check_delay_gain(opts); break;
      case 8: res = check_concentration(opts); break;
      case 9: res = check_destination_maximum(opts); break;
      case 10: res = check_classifier_fixtures(opts); break;
      default: throw Error(Errc::invalid_argument, "no check " + std::to_string(id));
    }
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_argument && (id < 1 || id > kCheckCount)) throw;
    res = make(id, false, std::string("error: ") + e.what());
  } catch (const std::exception& e) {
    res = make(id, false, std::string("error: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<int> ids = opts.only;
  if (ids.empty()) {
    for (int i = 1; i <= kCheckCount; ++i) ids.push_back(i);
  }
  std::vector<CheckResult> out;
  for (int id : ids) {
    out.push_back(run_check(id, opts));
    if (opts.on_result) opts.on_result(out.back());
  }
  return out;
}

}  // namespace mcis
