#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "model.hpp"

namespace mcis {

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline double distance_sq(Point a, Point b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Square g x g tiling of the unit square. Cells are half-open [x0, x1) x
// [y0, y1) except that the last column/row also owns x = 1 / y = 1. Cell
// index = row * g + col, row 0 at the bottom.
class CellGrid {
 public:
  explicit CellGrid(std::size_t side = 1);

  // g = round(1 / sqrt(area)), at least 1.
  static CellGrid from_area(double area);

  std::size_t side() const { return side_; }
  std::size_t cell_count() const { return side_ * side_; }
  double cell_side() const { return 1.0 / static_cast<double>(side_); }
  double cell_area() const { return cell_side() * cell_side(); }

  std::size_t column_of(double x) const;
  std::size_t row_of(double y) const { return column_of(y); }
  std::size_t cell_of(Point p) const { return row_of(p.y) * side_ + column_of(p.x); }
  std::size_t index(std::size_t col, std::size_t row) const { return row * side_ + col; }
  std::size_t column(std::size_t cell) const { return cell % side_; }
  std::size_t row(std::size_t cell) const { return cell / side_; }
  Point center(std::size_t cell) const;

 private:
  std::size_t side_;
};

// Buckets points of a grid; members of each cell listed by ascending index.
class CellIndex {
 public:
  CellIndex(const CellGrid& grid, std::span<const Point> points);

  const CellGrid& grid() const { return grid_; }
  std::span<const std::size_t> members(std::size_t cell) const {
    return {members_.data() + offsets_[cell], offsets_[cell + 1] - offsets_[cell]};
  }
  std::size_t cell_of_point(std::size_t i) const { return point_cell_[i]; }

  // Calls f(j) for every point j with distance(points[j], p) < radius.
  template <class F>
  void for_each_within(std::span<const Point> points, Point p, double radius, F&& f) const;

 private:
  CellGrid grid_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> point_cell_;
};

struct Topology {
  std::vector<Point> nodes;
  std::vector<Point> bs;
  CellGrid cells;
  CellGrid bs_grid;
  std::vector<std::size_t> node_cell;
  std::vector<std::size_t> node_bscell;
  double requested_area = 0.0;  // area the cell grid was derived from
};

// n i.i.d. uniform points on [0,1]^2, determined by seed.
std::vector<Point> place_nodes(std::size_t n, std::uint64_t seed);

// Base station k = row * b0 + col at ((col + 0.5) / b0, (row + 0.5) / b0).
std::vector<Point> build_bs_grid(std::size_t b);

// min(max(100 sqrt(C_A) ln n / n, ln^{3/2} n / (sqrt(C_A) n)),
//     ln^{3/2} n ln(H^2 ln n) / (n^{3/2} ln ln(H^2 ln n))).
// Throws Errc::domain when H^2 ln n <= e.
double cell_area(double n, int C_A, double H);

// Builds positions and both grids; the ad hoc grid is CellGrid::from_area(area).
Topology build_topology(const NetworkConfig& cfg, double area);
// Same, with an explicit ad hoc grid.
Topology build_topology(const NetworkConfig& cfg, const CellGrid& grid);

std::vector<std::size_t> nodes_per_cell(const Topology& topo);
std::vector<std::size_t> nodes_per_bscell(const Topology& topo);

template <class F>
void CellIndex::for_each_within(std::span<const Point> points, Point p, double radius, F&& f) const {
  const double side = grid_.cell_side();
  const auto g = static_cast<long>(grid_.side());
  const auto clamp = [g](long v) { return v < 0 ? 0 : (v >= g ? g - 1 : v); };
  const long c0 = clamp(static_cast<long>(std::floor((p.x - radius) / side)));
  const long c1 = clamp(static_cast<long>(std::floor((p.x + radius) / side)));
  const long r0 = clamp(static_cast<long>(std::floor((p.y - radius) / side)));
  const long r1 = clamp(static_cast<long>(std::floor((p.y + radius) / side)));
  const double r2 = radius * radius;
  for (long row = r0; row <= r1; ++row) {
    for (long col = c0; col <= c1; ++col) {
      for (std::size_t j : members(grid_.index(static_cast<std::size_t>(col), static_cast<std::size_t>(row)))) {
        if (distance_sq(points[j], p) < r2) f(j);
      }
    }
  }
}

}  // namespace mcis
