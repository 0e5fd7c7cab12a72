#pragma once

// Reference computations that deliberately take a different route than the
// library code they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <set>
#include <vector>

#include "topology.hpp"

namespace oracle {

// Mean hop count by direct summation over rings: ring i holds a fraction
// (i^2 - (i-1)^2) / H^2 of the reachable disk.
inline double ring_hops(int H) {
  double sum = 0.0;
  for (int i = 1; i <= H; ++i) sum += i * static_cast<double>(i * i - (i - 1) * (i - 1));
  return sum / (static_cast<double>(H) * H);
}

// Liang-Barsky: does segment a-b meet the closed box [x0,x1] x [y0,y1]?
inline bool segment_hits_box(mcis::Point a, mcis::Point b, double x0, double y0, double x1, double y1) {
  double t0 = 0.0, t1 = 1.0;
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {a.x - x0, x1 - a.x, a.y - y0, y1 - a.y};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return false;
      continue;
    }
    const double t = q[i] / p[i];
    if (p[i] < 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return false;
  }
  return true;
}

inline std::set<std::size_t> cells_hit(const mcis::CellGrid& grid, mcis::Point a, mcis::Point b) {
  std::set<std::size_t> out;
  const double s = grid.cell_side();
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const double x0 = grid.column(c) * s, y0 = grid.row(c) * s;
    if (segment_hits_box(a, b, x0, y0, x0 + s, y0 + s)) out.insert(c);
  }
  return out;
}

// Event-driven FCFS queue: each packet takes the server that frees up first.
inline double queue_mean_sojourn(const std::vector<double>& arrivals, int servers, double service) {
  std::priority_queue<double, std::vector<double>, std::greater<>> free_at;
  for (int i = 0; i < servers; ++i) free_at.push(0.0);
  double total = 0.0;
  for (double t : arrivals) {
    const double start = std::max(t, free_at.top());
    free_at.pop();
    free_at.push(start + service);
    total += start + service - t;
  }
  return arrivals.empty() ? 0.0 : total / static_cast<double>(arrivals.size());
}

// Cells whose four corners all lie within `radius` of `center`.
inline std::size_t cells_inside_disk(const mcis::CellGrid& grid, mcis::Point center, double radius) {
  const double s = grid.cell_side();
  std::size_t count = 0;
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const double x0 = grid.column(c) * s, y0 = grid.row(c) * s;
    bool inside = true;
    for (double x : {x0, x0 + s}) {
      for (double y : {y0, y0 + s}) {
        if (std::hypot(x - center.x, y - center.y) > radius * (1 + 1e-12)) inside = false;
      }
    }
    if (inside) ++count;
  }
  return count;
}

// Pairwise guard-zone test written from the predicate's definition.
inline bool guard_zone_ok(const std::vector<std::pair<mcis::Point, mcis::Point>>& links, double delta) {
  for (std::size_t i = 0; i < links.size(); ++i) {
    const double need = (1.0 + delta) * mcis::distance(links[i].first, links[i].second);
    for (std::size_t k = 0; k < links.size(); ++k) {
      if (k != i && mcis::distance(links[k].first, links[i].second) < need) return false;
    }
  }
  return true;
}

}  // namespace oracle
