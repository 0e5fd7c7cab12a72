#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>
#include <vector>

#include "error.hpp"
#include "harness.hpp"
#include "oracles.hpp"
#include "rng.hpp"
#include "routing.hpp"

using namespace mcis;

namespace {

Topology hand_topology(std::vector<Point> nodes, std::size_t side) {
  Topology t;
  t.cells = CellGrid(side);
  t.nodes = std::move(nodes);
  for (const auto& p : t.nodes) {
    t.node_cell.push_back(t.cells.cell_of(p));
    t.node_bscell.push_back(0);
  }
  return t;
}

bool neighbours(const CellGrid& g, std::size_t a, std::size_t b) {
  const long dc = std::labs(static_cast<long>(g.column(a)) - static_cast<long>(g.column(b)));
  const long dr = std::labs(static_cast<long>(g.row(a)) - static_cast<long>(g.row(b)));
  return dc <= 1 && dr <= 1 && dc + dr > 0;
}

}  // namespace

TEST_CASE("mode selection") {
  CHECK(select_mode(0.05, 2, 0.1) == Mode::AdHoc);
  CHECK(select_mode(0.5, 2, 0.1) == Mode::Infrastructure);
  CHECK(select_mode(0.2, 2, 0.1) == Mode::AdHoc);  // closed boundary
  CHECK(select_mode(0.5, 2, 0.1, false) == Mode::AdHoc);

  NetworkConfig cfg;
  const Topology t = hand_topology({{0.1, 0.1}, {0.9, 0.9}}, 4);
  CHECK_THROWS_AS(select_mode(t, 1, 1, cfg, 0.1), Error);
  CHECK(select_mode(t, 0, 1, cfg, 0.1) == Mode::Infrastructure);
}

TEST_CASE("hop-count law") {
  CHECK(expected_hops(1) == 1.0);
  CHECK(expected_hops(2) == doctest::Approx(1.75));
  CHECK(expected_hops(10) == doctest::Approx(7.15));
  for (int H = 1; H <= 60; ++H) CHECK(expected_hops(H) == doctest::Approx(oracle::ring_hops(H)));
  CHECK_THROWS_AS(expected_hops(0), Error);
}

TEST_CASE("ad hoc probability") {
  CHECK(prob_adhoc(1, 1.0 / std::sqrt(std::numbers::pi)) == doctest::Approx(1.0));
  CHECK(prob_adhoc(2, 0.1) == doctest::Approx(0.125664).epsilon(1e-5));
  CHECK(prob_adhoc(5, 0.2) == 1.0);
}

TEST_CASE("geometric hops") {
  CHECK(geometric_hops(0.0, 0.1) == 1);
  CHECK(geometric_hops(0.1, 0.1) == 1);
  CHECK(geometric_hops(0.25, 0.1) == 3);
}

TEST_CASE("cells on a segment agree with box clipping") {
  Rng rng(2024);
  for (std::size_t side : {1u, 2u, 7u, 13u, 40u}) {
    const CellGrid g(side);
    for (int k = 0; k < 400; ++k) {
      const Point a{rng.uniform(), rng.uniform()};
      Point b{rng.uniform(), rng.uniform()};
      if (k % 10 == 0) b = {a.x + 0.3 * (rng.uniform() - 0.5) / side, a.y};  // nearly horizontal
      b.x = std::clamp(b.x, 0.0, 1.0);
      const auto cells = cells_on_segment(g, a, b);
      REQUIRE_FALSE(cells.empty());
      CHECK(cells.front() == g.cell_of(a));
      CHECK(cells.back() == g.cell_of(b));
      const std::set<std::size_t> got(cells.begin(), cells.end());
      CHECK(got.size() == cells.size());
      CHECK(got == oracle::cells_hit(g, a, b));
      for (std::size_t i = 1; i < cells.size(); ++i) CHECK(neighbours(g, cells[i - 1], cells[i]));
    }
  }
}

TEST_CASE("cells on a segment through a grid corner") {
  const CellGrid g(4);
  const auto cells = cells_on_segment(g, {0.1, 0.1}, {0.4, 0.4});
  // passes exactly through (0.25, 0.25): diagonal step
  CHECK(cells == std::vector<std::size_t>{g.index(0, 0), g.index(1, 1)});
}

TEST_CASE("routes inside one cell or across neighbours") {
  // 4x4 grid, side 0.25; r = sqrt(8) * 0.25 covers adjacent cells
  const double r = std::sqrt(8.0) * 0.25;
  const Topology t = hand_topology({{0.05, 0.1}, {0.2, 0.2}, {0.3, 0.1}, {0.45, 0.15}, {0.6, 0.12}}, 4);
  RelayTable relays(t.cells, t.nodes);

  const auto same = build_route_adhoc(0, 1, t, relays, r);
  REQUIRE(same);
  CHECK(*same == std::vector<std::size_t>{0, 1});

  const auto adjacent = build_route_adhoc(0, 3, t, relays, r);
  REQUIRE(adjacent);
  CHECK(adjacent->size() == 2);  // both endpoints' cells are the only ones crossed

  const auto across = build_route_adhoc(0, 4, t, relays, r);
  REQUIRE(across);
  CHECK(across->size() <= 3);
  CHECK(across->front() == 0);
  CHECK(across->back() == 4);
  for (std::size_t i = 1; i < across->size(); ++i) CHECK(distance(t.nodes[(*across)[i - 1]], t.nodes[(*across)[i]]) <= r);

  CHECK_THROWS_AS(build_route_adhoc(2, 2, t, relays, r), Error);
}

TEST_CASE("relays rotate round-robin, nearest to the centre first") {
  // one middle cell with three candidates, flows from the left cell to the right cell
  const Topology t = hand_topology(
      {{0.1, 0.5}, {0.9, 0.5}, {0.5, 0.5}, {0.45, 0.55}, {0.6, 0.4}}, 3);
  RelayTable relays(t.cells, t.nodes);
  const std::size_t middle = t.cells.index(1, 1);
  const auto order = relays.ordered(middle);
  REQUIRE(order.size() == 3);
  CHECK(order[0] == 2);
  CHECK(order[1] == 3);
  CHECK(order[2] == 4);

  std::vector<std::size_t> used;
  for (int k = 0; k < 6; ++k) {
    const auto path = build_route_adhoc(0, 1, t, relays, 1.0);
    REQUIRE(path);
    REQUIRE(path->size() == 3);
    used.push_back((*path)[1]);
  }
  CHECK(used == std::vector<std::size_t>{2, 3, 4, 2, 3, 4});
}

TEST_CASE("unroutable routes leave the rotation untouched") {
  const Topology t = hand_topology({{0.05, 0.5}, {0.95, 0.5}, {0.5, 0.5}}, 3);
  RelayTable relays(t.cells, t.nodes);
  CHECK_FALSE(build_route_adhoc(0, 1, t, relays, 0.3));
  CHECK(relays.cursor(t.cells.index(1, 1)) == 0);
}

TEST_CASE("flow assignment") {
  NetworkConfig cfg;
  cfg.n = 2;
  cfg.b = 1;
  const Topology t = hand_topology({{0.4, 0.5}, {0.5, 0.5}}, 2);
  const FlowSet two = assign_flows(t, cfg, 0.5);
  REQUIRE(two.flows.size() == 2);
  CHECK(two.flows[0].src == 0);
  CHECK(two.flows[0].dst == 1);
  CHECK(two.flows[1].src == 1);
  CHECK(two.flows[1].dst == 0);
  CHECK(two.adhoc_sources == 2);
  CHECK(two.graph.edges.size() == 2);

  cfg.n = 600;
  cfg.seed = 8;
  cfg.H = 2;
  const double r = connectivity_radius(cfg.n, 2.0);
  const Topology big = build_topology(cfg, CellGrid(routing_grid_side(r)));
  const FlowSet fs = assign_flows(big, cfg, r);
  CHECK(fs.flows.size() == 600);
  std::size_t adhoc = 0, hop_edges = 0;
  for (const Flow& f : fs.flows) {
    CHECK(f.src != f.dst);
    CHECK(f.id == f.src);
    CHECK(f.length == doctest::Approx(distance(big.nodes[f.src], big.nodes[f.dst])));
    if (f.mode == Mode::AdHoc) {
      ++adhoc;
      CHECK(f.length <= cfg.H * r);
      if (!f.routed()) continue;
      hop_edges += f.hops();
      const auto crossed = cells_on_segment(big.cells, big.nodes[f.src], big.nodes[f.dst]);
      const std::set<std::size_t> allowed(crossed.begin(), crossed.end());
      for (std::size_t i = 0; i < f.path.size(); ++i) {
        CHECK(allowed.count(big.node_cell[f.path[i]]) == 1);
        if (i > 0) CHECK(distance(big.nodes[f.path[i - 1]], big.nodes[f.path[i]]) <= r);
      }
    } else {
      CHECK(f.length > cfg.H * r);
      CHECK(f.hops() == 2);
      CHECK(f.uplink_bs == big.node_bscell[f.src]);
      CHECK(f.downlink_bs == big.node_bscell[f.dst]);
    }
  }
  CHECK(adhoc == fs.adhoc_sources);
  CHECK(hop_edges == fs.graph.edges.size());
  CHECK(assign_flows(big, cfg, r).graph.edges.size() == fs.graph.edges.size());
}

TEST_CASE("destination loads and lines per cell") {
  Topology t = hand_topology({{0.1, 0.1}, {0.9, 0.1}, {0.5, 0.9}}, 4);
  std::vector<Flow> flows(3);
  flows[0] = {0, 0, 1, Mode::AdHoc, {0, 1}, 0, 0, 0.8};
  flows[1] = {1, 1, 0, Mode::Infrastructure, {}, 0, 0, 0.8};
  flows[2] = {2, 2, 1, Mode::AdHoc, {2, 1}, 0, 0, 0.9};
  const auto loads = destination_loads(flows, 3);
  CHECK(loads == std::vector<std::size_t>{0, 2, 0});

  const std::vector<Flow> single{flows[0]};
  const auto counts = count_lines_per_cell(single, t);
  const auto crossed = cells_on_segment(t.cells, t.nodes[0], t.nodes[1]);
  for (std::size_t c = 0; c < counts.size(); ++c) {
    const bool on = std::find(crossed.begin(), crossed.end(), c) != crossed.end();
    CHECK(counts[c] == (on ? 1u : 0u));
  }
  const auto none = count_lines_per_cell({}, t);
  CHECK(std::all_of(none.begin(), none.end(), [](std::size_t v) { return v == 0; }));
}

TEST_CASE("balls into bins") {
  Rng rng(5);
  CHECK(balls_into_bins_max(10, 1, rng) == 10);
  for (int k = 0; k < 20; ++k) {
    const auto m = balls_into_bins_max(1000, 100, rng);
    CHECK(m >= 10);
    CHECK(m <= 1000);
  }
  CHECK_THROWS_AS(balls_into_bins_max(3, 0, rng), Error);
}
