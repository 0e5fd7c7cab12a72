#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "model.hpp"
#include "rng.hpp"
#include "topology.hpp"

namespace mcis {

enum class Mode { AdHoc, Infrastructure };
const char* mode_name(Mode mode);

struct Flow {
  std::size_t id = 0;
  std::size_t src = 0;
  std::size_t dst = 0;
  Mode mode = Mode::AdHoc;
  // AdHoc: src, relays..., dst (empty when unroutable).
  std::vector<std::size_t> path;
  // Infrastructure: base stations of the source's and destination's BS-cells.
  std::size_t uplink_bs = 0;
  std::size_t downlink_bs = 0;
  double length = 0.0;  // src-dst euclidean distance

  bool routed() const { return mode == Mode::Infrastructure || path.size() >= 2; }
  std::size_t hops() const;
};

// One directed transmission of an ad hoc flow.
struct Hop {
  std::size_t tx = 0;
  std::size_t rx = 0;
  std::size_t flow = 0;
  std::size_t index = 0;  // position along the flow, from 0
};

// Vertices are nodes, one edge per hop of every routed ad hoc flow.
struct RoutingGraph {
  std::size_t node_count = 0;
  std::vector<Hop> edges;
  std::vector<std::size_t> degree;  // incident hops per node
  std::vector<std::size_t> load;    // distinct ad hoc flows touching each node (f)

  std::size_t max_degree() const;
};

struct FlowSet {
  std::vector<Flow> flows;
  RoutingGraph graph;
  std::vector<std::size_t> relay_load;  // times each node was chosen as a relay
  std::size_t adhoc_sources = 0;
  std::size_t unroutable = 0;
};

// AdHoc iff distance <= H * r (closed), or when there is no infrastructure.
Mode select_mode(double distance, int H, double r, bool infrastructure = true);
// Throws Errc::invalid_argument for src == dst.
Mode select_mode(const Topology& topo, std::size_t src, std::size_t dst, const NetworkConfig& cfg, double r);

// (4H^3 + 3H^2 - H) / (6H^2).
double expected_hops(int H);

// min(pi H^2 r^2, 1).
double prob_adhoc(double H, double r);

// Hops a straight-line multi-hop route of reach r needs to cover `distance`.
int geometric_hops(double distance, double r);

// Cells crossed by the closed segment a-b, ordered from a's cell to b's cell.
std::vector<std::size_t> cells_on_segment(const CellGrid& grid, Point a, Point b);

// Candidate relays per cell, nearest to the cell center first (ties by lower
// index), handed out round-robin.
class RelayTable {
 public:
  RelayTable(const CellGrid& grid, std::span<const Point> nodes);

  std::span<const std::size_t> ordered(std::size_t cell) const {
    return {order_.data() + offsets_[cell], offsets_[cell + 1] - offsets_[cell]};
  }
  std::size_t cursor(std::size_t cell) const { return cursor_[cell]; }
  void advance(std::size_t cell, std::size_t to) { cursor_[cell] = to; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> cursor_;
};

// Relays one per nonempty cell crossed by the S-D segment (excluding the
// endpoint cells), each the next in-range node of that cell's rotation. Every
// hop is at most r; std::nullopt when some hop cannot be kept within r.
// Rotation cursors advance only on success.
std::optional<std::vector<std::size_t>> build_route_adhoc(std::size_t src, std::size_t dst, const Topology& topo,
                                                          RelayTable& relays, double r);

// One flow per source with a uniformly chosen destination other than itself,
// modes by select_mode, ad hoc routes by build_route_adhoc.
FlowSet assign_flows(const Topology& topo, const NetworkConfig& cfg, double r);

// Number of ad hoc flows destined to each node.
std::vector<std::size_t> destination_loads(const std::vector<Flow>& flows, std::size_t node_count);

// Max bin occupancy after throwing `balls` uniformly into `bins`.
std::size_t balls_into_bins_max(std::size_t balls, std::size_t bins, Rng& rng);

// Number of ad hoc S-D segments intersecting each cell of topo.cells.
std::vector<std::size_t> count_lines_per_cell(const std::vector<Flow>& flows, const Topology& topo);

}  // namespace mcis
