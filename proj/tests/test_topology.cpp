#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "error.hpp"
#include "rng.hpp"
#include "topology.hpp"

using namespace mcis;

TEST_CASE("node placement") {
  const auto one = place_nodes(1, 123);
  REQUIRE(one.size() == 1);
  CHECK(one[0].x >= 0.0);
  CHECK(one[0].x <= 1.0);
  CHECK(one[0].y >= 0.0);
  CHECK(one[0].y <= 1.0);

  CHECK(place_nodes(50, 5) == place_nodes(50, 5));
  CHECK(place_nodes(50, 5) != place_nodes(50, 6));

  const std::size_t n = 100'000;
  const auto pts = place_nodes(n, 7);
  double mx = 0.0;
  for (const auto& p : pts) mx += p.x;
  mx /= static_cast<double>(n);
  // sd of the mean of U(0,1) is 1/sqrt(12 n); 3/sqrt(n) is a generous band
  CHECK(std::abs(mx - 0.5) <= 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("base station tessellation") {
  const auto b1 = build_bs_grid(1);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == Point{0.5, 0.5});

  const auto b4 = build_bs_grid(4);
  const std::vector<Point> want{{0.25, 0.25}, {0.75, 0.25}, {0.25, 0.75}, {0.75, 0.75}};
  CHECK(b4 == want);

  const auto b9 = build_bs_grid(9);
  REQUIRE(b9.size() == 9);
  CHECK(b9[1].x - b9[0].x == doctest::Approx(1.0 / 3.0));
  CHECK(b9[3].y - b9[0].y == doctest::Approx(1.0 / 3.0));
  CHECK(b9[4] == Point{0.5, 0.5});

  CHECK_THROWS_AS(build_bs_grid(5), Error);
}

TEST_CASE("cell area") {
  // term3 wins here
  CHECK(cell_area(1e4, 1, 2) == doctest::Approx(7.859e-5).epsilon(1e-3));
  CHECK(cell_area(1e6, 4, 1) == doctest::Approx(1.397e-7).epsilon(1e-3));
  CHECK_THROWS_AS(cell_area(3, 1, 1), Error);
  try {
    cell_area(3, 1, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::domain);
  }
}

TEST_CASE("cell grid conventions") {
  const CellGrid g(4);
  CHECK(g.cell_of({0.0, 0.0}) == 0);
  CHECK(g.cell_of({1.0, 1.0}) == g.cell_count() - 1);
  CHECK(g.cell_of({0.25, 0.0}) == 1);  // left edge belongs to the cell on its right
  CHECK(g.cell_of({0.1, 0.3}) == g.index(0, 1));
  CHECK(g.center(0) == Point{0.125, 0.125});
  CHECK(g.column(g.index(3, 2)) == 3);
  CHECK(g.row(g.index(3, 2)) == 2);

  CHECK(CellGrid::from_area(0.01).side() == 10);
  CHECK(CellGrid::from_area(0.011).side() == 10);  // round(9.53)
  CHECK(CellGrid::from_area(5.0).side() == 1);
}

TEST_CASE("bucket index radius queries match brute force") {
  const auto pts = place_nodes(800, 3);
  const CellGrid grid(9);
  const CellIndex index(grid, pts);
  Rng rng(11);
  for (int q = 0; q < 50; ++q) {
    const Point p{rng.uniform(), rng.uniform()};
    const double radius = 0.02 + 0.3 * rng.uniform();
    std::set<std::size_t> got, want;
    index.for_each_within(pts, p, radius, [&](std::size_t j) { got.insert(j); });
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (distance(pts[j], p) < radius) want.insert(j);
    }
    CHECK(got == want);
  }
}

TEST_CASE("topology build") {
  NetworkConfig cfg;
  cfg.n = 500;
  cfg.b = 9;
  cfg.seed = 4;
  const Topology t = build_topology(cfg, CellGrid(6));
  CHECK(t.nodes.size() == 500);
  CHECK(t.bs.size() == 9);
  CHECK(t.bs_grid.side() == 3);
  CHECK(t.cells.side() == 6);
  const auto per_cell = nodes_per_cell(t);
  const auto per_bs = nodes_per_bscell(t);
  CHECK(per_cell.size() == 36);
  CHECK(per_bs.size() == 9);
  std::size_t total = 0;
  for (auto c : per_cell) total += c;
  CHECK(total == 500);
  total = 0;
  for (auto c : per_bs) total += c;
  CHECK(total == 500);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    CHECK(t.node_cell[i] == t.cells.cell_of(t.nodes[i]));
    CHECK(t.node_bscell[i] == t.bs_grid.cell_of(t.nodes[i]));
  }

  const Topology a = build_topology(cfg, 0.01);
  CHECK(a.cells.side() == 10);
  CHECK(a.requested_area == 0.01);
  CHECK(a.nodes == t.nodes);
}

TEST_CASE("cell occupancy concentrates above 50 ln n / n") {
  const std::size_t n = 100'000;
  const double a = 2.0 * 50.0 * std::log(static_cast<double>(n)) / static_cast<double>(n);
  NetworkConfig cfg;
  cfg.n = n;
  int good = 0;
  for (int s = 0; s < 10; ++s) {
    cfg.seed = 1000 + s;
    const auto counts = nodes_per_cell(build_topology(cfg, a));
    const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    if (*lo > 0 && static_cast<double>(*hi) / static_cast<double>(*lo) <= 4.0) ++good;
  }
  CHECK(good >= 9);
}
