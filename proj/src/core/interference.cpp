#include "interference.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace mcis {
namespace {

CellGrid grid_for_radius(double radius, std::size_t count) {
  if (!(radius > 0.0) || radius >= 1.0) return CellGrid(1);
  // no point in more buckets than points
  const double cap = std::max(1.0, std::ceil(std::sqrt(static_cast<double>(count))));
  return CellGrid(static_cast<std::size_t>(std::min(std::floor(1.0 / radius), cap)));
}

std::vector<Point> gather(std::span<const Point> nodes, const std::vector<std::size_t>& ids) {
  std::vector<Point> out;
  out.reserve(ids.size());
  for (auto id : ids) {
    if (id >= nodes.size()) throw Error(Errc::invalid_argument, "interference member out of range");
    out.push_back(nodes[id]);
  }
  return out;
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> find_violation(std::span<const Link> links, double delta) {
  const double guard = 1.0 + delta;
  if (links.size() <= 48) {
    for (std::size_t i = 0; i < links.size(); ++i) {
      const double limit = guard * distance(links[i].tx, links[i].rx);
      for (std::size_t j = 0; j < links.size(); ++j) {
        if (j != i && distance(links[j].tx, links[i].rx) < limit) return std::pair{i, j};
      }
    }
    return std::nullopt;
  }

  double reach = 0.0;
  for (const auto& l : links) reach = std::max(reach, guard * distance(l.tx, l.rx));
  std::vector<Point> tx(links.size());
  std::transform(links.begin(), links.end(), tx.begin(), [](const Link& l) { return l.tx; });
  const CellIndex index(grid_for_radius(reach, tx.size()), tx);

  for (std::size_t i = 0; i < links.size(); ++i) {
    const double limit = guard * distance(links[i].tx, links[i].rx);
    std::optional<std::size_t> hit;
    index.for_each_within(tx, links[i].rx, limit, [&](std::size_t j) {
      if (j != i && (!hit || j < *hit)) hit = j;
    });
    if (hit) return std::pair{i, *hit};
  }
  return std::nullopt;
}

bool is_concurrent_set_feasible(std::span<const Link> links, double delta) {
  return !find_violation(links, delta).has_value();
}

int interfering_cell_bound(double delta) {
  if (!(delta > 0.0)) throw Error(Errc::guard_zone, "guard zone delta must be positive");
  const double grow = 1.0 + delta;
  return static_cast<int>(std::ceil(4.0 * grow * grow - 1e-12));
}

std::vector<std::size_t> interfering_cells(std::size_t cell, const CellGrid& grid, double delta) {
  if (!(delta > 0.0)) throw Error(Errc::guard_zone, "guard zone delta must be positive");
  if (cell >= grid.cell_count()) throw Error(Errc::invalid_argument, "cell index out of range");
  // everything in cell-side units
  const double reach = (1.0 + delta) * std::sqrt(2.0);
  const double reach_sq = reach * reach;
  const auto span = static_cast<long>(std::ceil(reach));
  const auto g = static_cast<long>(grid.side());
  const auto col = static_cast<long>(grid.column(cell));
  const auto row = static_cast<long>(grid.row(cell));

  std::vector<std::size_t> out;
  for (long dr = -span; dr <= span; ++dr) {
    for (long dc = -span; dc <= span; ++dc) {
      const long c = col + dc, r = row + dr;
      if (c < 0 || c >= g || r < 0 || r >= g) continue;
      const double fx = std::abs(static_cast<double>(dc)) + 0.5;
      const double fy = std::abs(static_cast<double>(dr)) + 0.5;
      if (fx * fx + fy * fy <= reach_sq + 1e-12) out.push_back(grid.index(static_cast<std::size_t>(c), static_cast<std::size_t>(r)));
    }
  }
  return out;
}

InterferenceGraph::InterferenceGraph(std::span<const Point> nodes, std::vector<std::size_t> members, double radius)
    : ids_(std::move(members)),
      points_(gather(nodes, ids_)),
      radius_(radius),
      index_(grid_for_radius(radius, ids_.size()), points_) {}

std::size_t InterferenceGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for_each_neighbor(v, [&](std::size_t) { ++d; });
  return d;
}

std::size_t InterferenceGraph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

bool InterferenceGraph::adjacent(std::size_t u, std::size_t v) const {
  return u != v && distance_sq(points_[u], points_[v]) < radius_ * radius_;
}

std::vector<std::pair<std::size_t, std::size_t>> InterferenceGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    for_each_neighbor(v, [&](std::size_t u) {
      if (ids_[v] < ids_[u]) out.emplace_back(ids_[v], ids_[u]);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

InterferenceGraph build_interference_graph(const Topology& topo, std::vector<std::size_t> transmitters, double r,
                                           double delta) {
  if (!(r > 0.0)) throw Error(Errc::range, "range must be positive");
  if (!(delta > 0.0)) throw Error(Errc::guard_zone, "guard zone delta must be positive");
  return InterferenceGraph(topo.nodes, std::move(transmitters), (2.0 + delta) * r);
}

}  // namespace mcis
