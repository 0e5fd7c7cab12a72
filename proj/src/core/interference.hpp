#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "topology.hpp"

namespace mcis {

struct Link {
  Point tx;
  Point rx;
};

// Guard-zone check for links sharing one channel at one time: every receiver
// must be at least (1 + delta) times its own link length away from every
// other transmitter of the set.
bool is_concurrent_set_feasible(std::span<const Link> links, double delta);

// First (victim, interferer) pair that breaks the guard zone, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_violation(std::span<const Link> links, double delta);

// ceil(4 (1 + delta)^2).
int interfering_cell_bound(double delta);

// Cells lying entirely inside the disk of radius (1 + delta) sqrt(2 a) around
// the center of `cell` (a = cell area), the cell itself included.
std::vector<std::size_t> interfering_cells(std::size_t cell, const CellGrid& grid, double delta);

// Pairs of nodes closer than `radius` may not share a (time, channel) slot.
// With radius (2 + delta) r, two non-adjacent transmitters never break each
// other's receptions when both links are at most r long. Neighbors are found
// on demand through a bucket grid, so nothing quadratic is stored.
class InterferenceGraph {
 public:
  // `members` are node ids of `nodes` that take part; vertex v is members[v].
  InterferenceGraph(std::span<const Point> nodes, std::vector<std::size_t> members, double radius);

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t node_of(std::size_t v) const { return ids_[v]; }
  double radius() const { return radius_; }

  template <class F>
  void for_each_neighbor(std::size_t v, F&& f) const {
    index_.for_each_within(points_, points_[v], radius_, [&](std::size_t u) {
      if (u != v) f(u);
    });
  }

  std::size_t degree(std::size_t v) const;
  std::size_t max_degree() const;
  bool adjacent(std::size_t u, std::size_t v) const;

  // Node-id pairs (a < b).
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  std::vector<std::size_t> ids_;
  std::vector<Point> points_;
  double radius_;
  CellIndex index_;
};

// Graph over the given transmitters with radius (2 + delta) r.
InterferenceGraph build_interference_graph(const Topology& topo, std::vector<std::size_t> transmitters, double r,
                                           double delta);

}  // namespace mcis
