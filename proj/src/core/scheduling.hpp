#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "model.hpp"
#include "routing.hpp"
#include "topology.hpp"

namespace mcis {

struct MiniSlot {
  std::uint32_t mslot = 0;
  std::uint32_t channel = 0;
  bool operator==(const MiniSlot&) const = default;
};

// Vertex color s (1-based) transmits in mini-slot ceil(s / C_A) on channel
// (s mod C_A) + 1.
MiniSlot assign_minislot(std::uint32_t s, int C_A);

enum class Role { Tx, Rx };
const char* role_name(Role role);

struct ScheduleEntry {
  std::size_t node = 0;
  std::uint32_t eslot = 0;
  std::uint32_t mslot = 0;
  std::uint32_t channel = 0;
  Role role = Role::Tx;
  std::size_t flow = 0;
  std::size_t hop = 0;
};

// Round-robin BS-cell activation. BS-cells are taken row-major in clusters of
// `length`; cell k is active in slot k mod length.
struct BsFrame {
  int length = 1;
  std::vector<int> active_slot;  // per BS-cell
  double cell_rate = 0.0;        // frame-averaged rate of one BS-cell

  std::vector<std::size_t> active_in(int slot) const;
};

// One-second TDMA structure: E edge-color slots, each split into M mini-slots
// on every ad hoc channel. Hop e runs in slot hop_slot[e]; its transmitter's
// vertex color fixes the mini-slot and channel.
struct Schedule {
  std::size_t E = 0;
  std::size_t M = 0;
  int C_A = 1;
  std::vector<std::uint32_t> hop_slot;    // per routing-graph edge, 1-based
  std::vector<std::uint32_t> node_color;  // per node, 0 when it never transmits
  std::size_t vertex_colors = 0;
  std::size_t interference_max_degree = 0;
  std::size_t routing_max_degree = 0;
  BsFrame bs;

  MiniSlot slot_of(std::size_t node) const { return assign_minislot(node_color[node], C_A); }
  // Tx and Rx entry for every hop, in hop order.
  std::vector<ScheduleEntry> entries(const RoutingGraph& graph) const;
};

// Per-cell rate is min(C_I, m) channels of W_I / C_I each, one slot in `length`.
BsFrame build_bs_schedule_sigma1(std::size_t bs_cells, int k8, int C_I, int m, double W_I);

// Colors the routing graph (edge slots) and the interference graph of all
// transmitters (mini-slots/channels). Throws Errc::infeasible naming the flow
// when a hop is longer than r.
Schedule build_adhoc_schedule(const Topology& topo, const FlowSet& flows, const NetworkConfig& cfg, double r);

struct AuditReport {
  std::size_t half_duplex = 0;  // node used twice in one edge-color slot
  std::size_t guard_zone = 0;   // receptions broken inside a (slot, mini-slot, channel) set
  std::size_t unserved = 0;     // hops missing, out of range, or outside the frame
  std::string first;            // description of the first violation

  bool ok() const { return half_duplex == 0 && guard_zone == 0 && unserved == 0; }
};

AuditReport audit_schedule(const Schedule& schedule, const Topology& topo, const FlowSet& flows,
                           const NetworkConfig& cfg, double r);

}  // namespace mcis
