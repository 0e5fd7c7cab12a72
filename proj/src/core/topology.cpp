#include "topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "error.hpp"
#include "rng.hpp"

namespace mcis {

CellGrid::CellGrid(std::size_t side) : side_(side == 0 ? 1 : side) {}

CellGrid CellGrid::from_area(double area) {
  if (!(area > 0.0)) throw Error(Errc::invalid_argument, "cell area must be positive");
  const double g = std::round(1.0 / std::sqrt(area));
  return CellGrid(g < 1.0 ? 1 : static_cast<std::size_t>(g));
}

std::size_t CellGrid::column_of(double x) const {
  if (!(x > 0.0)) return 0;
  const auto c = static_cast<std::size_t>(x * static_cast<double>(side_));
  return std::min(c, side_ - 1);
}

Point CellGrid::center(std::size_t cell) const {
  const double s = cell_side();
  return {(static_cast<double>(column(cell)) + 0.5) * s, (static_cast<double>(row(cell)) + 0.5) * s};
}

CellIndex::CellIndex(const CellGrid& grid, std::span<const Point> points)
    : grid_(grid), offsets_(grid.cell_count() + 1, 0), members_(points.size()), point_cell_(points.size()) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    point_cell_[i] = grid_.cell_of(points[i]);
    ++offsets_[point_cell_[i] + 1];
  }
  for (std::size_t c = 0; c < grid_.cell_count(); ++c) offsets_[c + 1] += offsets_[c];
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < points.size(); ++i) members_[fill[point_cell_[i]]++] = i;
}

std::vector<Point> place_nodes(std::size_t n, std::uint64_t seed) {
  Rng rng(Rng::derive(seed, stream::placement));
  std::vector<Point> nodes(n);
  for (auto& p : nodes) {
    p.x = rng.uniform();
    p.y = rng.uniform();
  }
  return nodes;
}

std::vector<Point> build_bs_grid(std::size_t b) {
  const std::size_t b0 = exact_sqrt(b);
  if (b0 == 0) throw Error(Errc::non_square_bs, "b must be a positive perfect square, got " + std::to_string(b));
  std::vector<Point> bs;
  bs.reserve(b);
  const double side = static_cast<double>(b0);
  for (std::size_t row = 0; row < b0; ++row) {
    for (std::size_t col = 0; col < b0; ++col) {
      bs.push_back({(static_cast<double>(col) + 0.5) / side, (static_cast<double>(row) + 0.5) / side});
    }
  }
  return bs;
}

double cell_area(double n, int C_A, double H) {
  if (!(n > 1.0) || C_A < 1 || !(H >= 1.0)) throw Error(Errc::domain, "cell_area needs n > 1, C_A >= 1, H >= 1");
  const double ln_n = std::log(n);
  const double inner = H * H * ln_n;
  if (!(inner > std::numbers::e)) {
    throw Error(Errc::domain, "cell_area undefined: H^2 ln n = " + std::to_string(inner) + " <= e");
  }
  const double sqrt_ca = std::sqrt(static_cast<double>(C_A));
  const double ln_32 = std::pow(ln_n, 1.5);
  const double connectivity = 100.0 * sqrt_ca * ln_n / n;
  const double interference = ln_32 / (sqrt_ca * n);
  const double destination = ln_32 * std::log(inner) / (std::pow(n, 1.5) * std::log(std::log(inner)));
  return std::min(std::max(connectivity, interference), destination);
}

Topology build_topology(const NetworkConfig& cfg, const CellGrid& grid) {
  Topology topo;
  topo.nodes = place_nodes(cfg.n, cfg.seed);
  topo.bs = build_bs_grid(cfg.b);
  topo.cells = grid;
  topo.bs_grid = CellGrid(exact_sqrt(cfg.b));
  topo.requested_area = grid.cell_area();
  topo.node_cell.resize(cfg.n);
  topo.node_bscell.resize(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    topo.node_cell[i] = topo.cells.cell_of(topo.nodes[i]);
    topo.node_bscell[i] = topo.bs_grid.cell_of(topo.nodes[i]);
  }
  return topo;
}

Topology build_topology(const NetworkConfig& cfg, double area) {
  Topology topo = build_topology(cfg, CellGrid::from_area(area));
  topo.requested_area = area;
  return topo;
}

std::vector<std::size_t> nodes_per_cell(const Topology& topo) {
  std::vector<std::size_t> hist(topo.cells.cell_count(), 0);
  for (auto c : topo.node_cell) ++hist[c];
  return hist;
}

std::vector<std::size_t> nodes_per_bscell(const Topology& topo) {
  std::vector<std::size_t> hist(topo.bs_grid.cell_count(), 0);
  for (auto c : topo.node_bscell) ++hist[c];
  return hist;
}

}  // namespace mcis
