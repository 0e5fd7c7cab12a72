#include "scheduling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "coloring.hpp"
#include "error.hpp"
#include "interference.hpp"

namespace mcis {

MiniSlot assign_minislot(std::uint32_t s, int C_A) {
  if (s < 1 || C_A < 1) throw Error(Errc::invalid_argument, "mini-slot assignment needs s >= 1 and C_A >= 1");
  const auto ca = static_cast<std::uint32_t>(C_A);
  return {(s + ca - 1) / ca, s % ca + 1};
}

const char* role_name(Role role) { return role == Role::Tx ? "tx" : "rx"; }

std::vector<std::size_t> BsFrame::active_in(int slot) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < active_slot.size(); ++k) {
    if (active_slot[k] == slot) out.push_back(k);
  }
  return out;
}

std::vector<ScheduleEntry> Schedule::entries(const RoutingGraph& graph) const {
  std::vector<ScheduleEntry> out;
  out.reserve(2 * graph.edges.size());
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const Hop& h = graph.edges[e];
    const MiniSlot ms = slot_of(h.tx);
    out.push_back({h.tx, hop_slot[e], ms.mslot, ms.channel, Role::Tx, h.flow, h.index});
    out.push_back({h.rx, hop_slot[e], ms.mslot, ms.channel, Role::Rx, h.flow, h.index});
  }
  return out;
}

BsFrame build_bs_schedule_sigma1(std::size_t bs_cells, int k8, int C_I, int m, double W_I) {
  if (k8 < 0) throw Error(Errc::invalid_argument, "k8 must be nonnegative");
  BsFrame frame;
  frame.length = k8 + 1;
  frame.active_slot.resize(bs_cells);
  for (std::size_t k = 0; k < bs_cells; ++k) frame.active_slot[k] = static_cast<int>(k % static_cast<std::size_t>(frame.length));
  if (C_I > 0 && m > 0) {
    const double channels = std::min(C_I, m);
    frame.cell_rate = channels * (W_I / C_I) / frame.length;
  }
  return frame;
}

Schedule build_adhoc_schedule(const Topology& topo, const FlowSet& flows, const NetworkConfig& cfg, double r) {
  const auto& graph = flows.graph;
  const std::size_t n = topo.nodes.size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(graph.edges.size());
  for (const Hop& h : graph.edges) {
    if (distance(topo.nodes[h.tx], topo.nodes[h.rx]) > r) {
      throw Error(Errc::infeasible, "flow " + std::to_string(h.flow) + " hop " + std::to_string(h.index) +
                                        ": receiver out of range");
    }
    pairs.emplace_back(h.tx, h.rx);
  }

  Schedule s;
  s.C_A = cfg.C_A;
  s.routing_max_degree = max_degree(n, pairs);
  s.hop_slot = greedy_edge_color(n, pairs);
  s.E = color_count(s.hop_slot);

  std::vector<std::size_t> transmitters;
  transmitters.reserve(pairs.size());
  for (auto [tx, rx] : pairs) transmitters.push_back(tx);
  std::sort(transmitters.begin(), transmitters.end());
  transmitters.erase(std::unique(transmitters.begin(), transmitters.end()), transmitters.end());

  const InterferenceGraph conflicts = build_interference_graph(topo, transmitters, r, cfg.delta);
  const auto colors = greedy_vertex_color(conflicts);
  s.node_color.assign(n, 0);
  for (std::size_t v = 0; v < colors.size(); ++v) s.node_color[conflicts.node_of(v)] = colors[v];
  s.vertex_colors = color_count(colors);
  s.interference_max_degree = conflicts.max_degree();
  const auto ca = static_cast<std::size_t>(cfg.C_A);
  s.M = (s.vertex_colors + ca - 1) / ca;

  const int k8 = BoundsConstants::from(cfg).k8;
  s.bs = build_bs_schedule_sigma1(topo.bs_grid.cell_count(), k8, cfg.C_I, cfg.m, cfg.W_I);
  return s;
}

AuditReport audit_schedule(const Schedule& schedule, const Topology& topo, const FlowSet& flows,
                           const NetworkConfig& cfg, double r) {
  AuditReport report;
  const auto& edges = flows.graph.edges;
  const auto& pos = topo.nodes;
  auto note = [&](const std::string& what) {
    if (report.first.empty()) report.first = what;
  };

  if (schedule.hop_slot.size() != edges.size()) {
    report.unserved += edges.size();
    note("slot table does not match the routing graph");
    return report;
  }

  // every hop present, inside the frame, and in range
  std::vector<std::size_t> per_flow(flows.flows.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Hop& h = edges[e];
    const std::uint32_t slot = schedule.hop_slot[e];
    const std::uint32_t color = schedule.node_color[h.tx];
    bool ok = slot >= 1 && slot <= schedule.E && color >= 1 && distance(pos[h.tx], pos[h.rx]) <= r;
    if (ok) {
      const MiniSlot ms = assign_minislot(color, schedule.C_A);
      ok = ms.mslot <= schedule.M && ms.channel >= 1 && ms.channel <= static_cast<std::uint32_t>(schedule.C_A);
    }
    if (!ok) {
      ++report.unserved;
      note("flow " + std::to_string(h.flow) + " hop " + std::to_string(h.index) + " is not served");
    }
    if (h.flow < per_flow.size()) ++per_flow[h.flow];
  }
  for (const Flow& f : flows.flows) {
    if (f.mode != Mode::AdHoc || !f.routed()) continue;
    if (per_flow[f.id] != f.hops()) {
      ++report.unserved;
      note("flow " + std::to_string(f.id) + " has " + std::to_string(per_flow[f.id]) + " scheduled hops, route has " +
           std::to_string(f.hops()));
    }
  }

  // half duplex: one entry per (node, edge-color slot)
  std::vector<std::pair<std::size_t, std::uint32_t>> busy;
  busy.reserve(2 * edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    busy.emplace_back(edges[e].tx, schedule.hop_slot[e]);
    busy.emplace_back(edges[e].rx, schedule.hop_slot[e]);
  }
  std::sort(busy.begin(), busy.end());
  for (std::size_t i = 1; i < busy.size(); ++i) {
    if (busy[i] == busy[i - 1]) {
      ++report.half_duplex;
      note("node " + std::to_string(busy[i].first) + " used twice in slot " + std::to_string(busy[i].second));
    }
  }

  // guard zone per (edge slot, mini-slot, channel); the transmitter's color fixes the last two
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t e) { return std::pair{schedule.hop_slot[e], schedule.node_color[edges[e].tx]}; };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<Link> links;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    links.clear();
    while (j < order.size() && key(order[j]) == key(order[i])) {
      const Hop& h = edges[order[j]];
      links.push_back({pos[h.tx], pos[h.rx]});
      ++j;
    }
    if (auto bad = find_violation(links, cfg.delta)) {
      ++report.guard_zone;
      const Hop& victim = edges[order[i + bad->first]];
      note("flow " + std::to_string(victim.flow) + " hop " + std::to_string(victim.index) +
           " breaks the guard zone in slot " + std::to_string(key(order[i]).first));
    }
    i = j;
  }
  return report;
}

}  // namespace mcis
