#include "routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "error.hpp"

namespace mcis {

const char* mode_name(Mode mode) { return mode == Mode::AdHoc ? "adhoc" : "infra"; }

std::size_t Flow::hops() const {
  if (mode == Mode::Infrastructure) return 2;  // uplink + downlink
  return path.empty() ? 0 : path.size() - 1;
}

std::size_t RoutingGraph::max_degree() const {
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

Mode select_mode(double distance, int H, double r, bool infrastructure) {
  if (!infrastructure) return Mode::AdHoc;
  return distance <= static_cast<double>(H) * r ? Mode::AdHoc : Mode::Infrastructure;
}

Mode select_mode(const Topology& topo, std::size_t src, std::size_t dst, const NetworkConfig& cfg, double r) {
  if (src == dst) throw Error(Errc::invalid_argument, "degenerate flow: src == dst == " + std::to_string(src));
  if (src >= topo.nodes.size() || dst >= topo.nodes.size()) throw Error(Errc::invalid_argument, "node index out of range");
  return select_mode(distance(topo.nodes[src], topo.nodes[dst]), cfg.H, r, cfg.infrastructure_enabled());
}

double expected_hops(int H) {
  if (H < 1) throw Error(Errc::hop_count, "H must be at least 1");
  const double h = H;
  return (4.0 * h * h * h + 3.0 * h * h - h) / (6.0 * h * h);
}

double prob_adhoc(double H, double r) { return std::min(std::numbers::pi * H * H * r * r, 1.0); }

int geometric_hops(double distance, double r) {
  if (!(r > 0.0)) throw Error(Errc::range, "range must be positive");
  const double q = std::ceil(distance / r);
  return q < 1.0 ? 1 : static_cast<int>(q);
}

std::vector<std::size_t> cells_on_segment(const CellGrid& grid, Point a, Point b) {
  const auto g = static_cast<long>(grid.side());
  const double s = grid.cell_side();
  long col = static_cast<long>(grid.column_of(a.x));
  long row = static_cast<long>(grid.row_of(a.y));
  const long end_col = static_cast<long>(grid.column_of(b.x));
  const long end_row = static_cast<long>(grid.row_of(b.y));

  std::vector<std::size_t> out;
  out.push_back(grid.index(static_cast<std::size_t>(col), static_cast<std::size_t>(row)));

  constexpr double inf = std::numeric_limits<double>::infinity();
  const double dx = b.x - a.x, dy = b.y - a.y;
  const long step_x = dx > 0 ? 1 : (dx < 0 ? -1 : 0);
  const long step_y = dy > 0 ? 1 : (dy < 0 ? -1 : 0);
  double t_x = step_x > 0 ? ((static_cast<double>(col) + 1) * s - a.x) / dx
               : step_x < 0 ? (static_cast<double>(col) * s - a.x) / dx : inf;
  double t_y = step_y > 0 ? ((static_cast<double>(row) + 1) * s - a.y) / dy
               : step_y < 0 ? (static_cast<double>(row) * s - a.y) / dy : inf;
  const double dt_x = step_x != 0 ? s / std::abs(dx) : inf;
  const double dt_y = step_y != 0 ? s / std::abs(dy) : inf;

  // the walk can only be off by rounding; cap it at the Manhattan distance
  long budget = std::abs(end_col - col) + std::abs(end_row - row);
  while ((col != end_col || row != end_row) && budget > 0) {
    if (t_x < t_y) {
      col += step_x;
      t_x += dt_x;
      --budget;
    } else if (t_y < t_x) {
      row += step_y;
      t_y += dt_y;
      --budget;
    } else {
      // exact corner: the segment passes diagonally
      col += step_x;
      row += step_y;
      t_x += dt_x;
      t_y += dt_y;
      budget -= 2;
    }
    if (col < 0 || col >= g || row < 0 || row >= g) break;
    out.push_back(grid.index(static_cast<std::size_t>(col), static_cast<std::size_t>(row)));
  }
  const std::size_t last = grid.index(static_cast<std::size_t>(end_col), static_cast<std::size_t>(end_row));
  if (out.back() != last) out.push_back(last);
  return out;
}

RelayTable::RelayTable(const CellGrid& grid, std::span<const Point> nodes)
    : offsets_(grid.cell_count() + 1, 0), order_(nodes.size()), cursor_(grid.cell_count(), 0) {
  CellIndex index(grid, nodes);
  for (std::size_t c = 0; c < grid.cell_count(); ++c) offsets_[c + 1] = offsets_[c] + index.members(c).size();
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const auto members = index.members(c);
    auto first = order_.begin() + static_cast<std::ptrdiff_t>(offsets_[c]);
    std::copy(members.begin(), members.end(), first);
    const Point center = grid.center(c);
    // members arrive in index order, so a stable sort keeps ties on the lower index
    std::stable_sort(first, first + static_cast<std::ptrdiff_t>(members.size()), [&](std::size_t u, std::size_t v) {
      return distance_sq(nodes[u], center) < distance_sq(nodes[v], center);
    });
  }
}

std::optional<std::vector<std::size_t>> build_route_adhoc(std::size_t src, std::size_t dst, const Topology& topo,
                                                          RelayTable& relays, double r) {
  if (src == dst) throw Error(Errc::invalid_argument, "degenerate flow: src == dst == " + std::to_string(src));
  const auto& pos = topo.nodes;
  const auto cells = cells_on_segment(topo.cells, pos[src], pos[dst]);

  std::vector<std::size_t> path{src};
  std::vector<std::pair<std::size_t, std::size_t>> picks;  // (cell, next cursor)
  std::size_t cur = src;
  for (std::size_t k = 1; k + 1 < cells.size(); ++k) {
    const std::size_t cell = cells[k];
    const auto ordered = relays.ordered(cell);
    if (ordered.empty()) continue;
    const std::size_t start = relays.cursor(cell);
    for (std::size_t t = 0; t < ordered.size(); ++t) {
      const std::size_t at = (start + t) % ordered.size();
      const std::size_t cand = ordered[at];
      if (cand == src || cand == dst) continue;
      if (distance(pos[cur], pos[cand]) <= r) {
        path.push_back(cand);
        picks.emplace_back(cell, (at + 1) % ordered.size());
        cur = cand;
        break;
      }
    }
    // no in-range candidate: fall through to the next crossed cell
  }
  if (distance(pos[cur], pos[dst]) > r) return std::nullopt;
  path.push_back(dst);
  for (auto [cell, next] : picks) relays.advance(cell, next);
  return path;
}

FlowSet assign_flows(const Topology& topo, const NetworkConfig& cfg, double r) {
  const std::size_t n = topo.nodes.size();
  if (n < 2) throw Error(Errc::node_count, "flow assignment needs at least 2 nodes");

  FlowSet set;
  set.flows.reserve(n);
  set.graph.node_count = n;
  set.graph.degree.assign(n, 0);
  set.graph.load.assign(n, 0);
  set.relay_load.assign(n, 0);

  Rng rng(Rng::derive(cfg.seed, stream::destinations));
  RelayTable relays(topo.cells, topo.nodes);

  for (std::size_t src = 0; src < n; ++src) {
    std::size_t dst = rng.below(n - 1);
    if (dst >= src) ++dst;

    Flow flow;
    flow.id = src;
    flow.src = src;
    flow.dst = dst;
    flow.length = distance(topo.nodes[src], topo.nodes[dst]);
    flow.mode = select_mode(flow.length, cfg.H, r, cfg.infrastructure_enabled());

    if (flow.mode == Mode::Infrastructure) {
      flow.uplink_bs = topo.node_bscell[src];
      flow.downlink_bs = topo.node_bscell[dst];
    } else {
      ++set.adhoc_sources;
      if (auto path = build_route_adhoc(src, dst, topo, relays, r)) {
        flow.path = std::move(*path);
        for (std::size_t h = 0; h + 1 < flow.path.size(); ++h) {
          const std::size_t tx = flow.path[h], rx = flow.path[h + 1];
          set.graph.edges.push_back({tx, rx, flow.id, h});
          ++set.graph.degree[tx];
          ++set.graph.degree[rx];
        }
        for (std::size_t v : flow.path) ++set.graph.load[v];
        for (std::size_t h = 1; h + 1 < flow.path.size(); ++h) ++set.relay_load[flow.path[h]];
      } else {
        ++set.unroutable;
      }
    }
    set.flows.push_back(std::move(flow));
  }
  return set;
}

std::vector<std::size_t> destination_loads(const std::vector<Flow>& flows, std::size_t node_count) {
  std::vector<std::size_t> loads(node_count, 0);
  for (const auto& f : flows) {
    if (f.mode == Mode::AdHoc && f.dst < node_count) ++loads[f.dst];
  }
  return loads;
}

std::size_t balls_into_bins_max(std::size_t balls, std::size_t bins, Rng& rng) {
  if (bins == 0) throw Error(Errc::invalid_argument, "need at least one bin");
  std::vector<std::size_t> count(bins, 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < balls; ++i) best = std::max(best, ++count[rng.below(bins)]);
  return best;
}

std::vector<std::size_t> count_lines_per_cell(const std::vector<Flow>& flows, const Topology& topo) {
  std::vector<std::size_t> counts(topo.cells.cell_count(), 0);
  for (const auto& f : flows) {
    if (f.mode != Mode::AdHoc) continue;
    for (std::size_t c : cells_on_segment(topo.cells, topo.nodes[f.src], topo.nodes[f.dst])) ++counts[c];
  }
  return counts;
}

}  // namespace mcis
