#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace mcis {

// Plain adjacency-list graph; handy for tests and small inputs.
struct AdjacencyGraph {
  std::vector<std::vector<std::size_t>> adj;

  explicit AdjacencyGraph(std::size_t n = 0) : adj(n) {}
  std::size_t vertex_count() const { return adj.size(); }
  void add_edge(std::size_t u, std::size_t v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  template <class F>
  void for_each_neighbor(std::size_t v, F&& f) const {
    for (auto u : adj[v]) f(u);
  }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adj) d = std::max(d, a.size());
    return d;
  }
};

// First-fit vertex coloring in index order; colors are 1-based and never
// exceed maxdeg + 1. Graph needs vertex_count() and for_each_neighbor(v, f).
template <class Graph>
std::vector<std::uint32_t> greedy_vertex_color(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> color(n, 0);
  std::vector<std::size_t> seen;  // seen[c] == v + 1 when a neighbor of v has color c
  for (std::size_t v = 0; v < n; ++v) {
    g.for_each_neighbor(v, [&](std::size_t u) {
      const auto c = color[u];
      if (c == 0) return;
      if (c >= seen.size()) seen.resize(c + 1, 0);
      seen[c] = v + 1;
    });
    std::uint32_t c = 1;
    while (c < seen.size() && seen[c] == v + 1) ++c;
    color[v] = c;
  }
  return color;
}

// First-fit edge coloring of a multigraph in edge order; 1-based colors, at
// most 2 maxdeg - 1 of them.
std::vector<std::uint32_t> greedy_edge_color(std::size_t vertex_count,
                                             const std::vector<std::pair<std::size_t, std::size_t>>& edges);

// Properness checks used by audits and tests.
template <class Graph>
bool is_proper_vertex_coloring(const Graph& g, const std::vector<std::uint32_t>& color) {
  if (color.size() != g.vertex_count()) return false;
  bool ok = true;
  for (std::size_t v = 0; v < g.vertex_count() && ok; ++v) {
    if (color[v] == 0) return false;
    g.for_each_neighbor(v, [&](std::size_t u) {
      if (color[u] == color[v]) ok = false;
    });
  }
  return ok;
}

bool is_proper_edge_coloring(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                             const std::vector<std::uint32_t>& color);

std::size_t max_degree(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

inline std::uint32_t color_count(const std::vector<std::uint32_t>& color) {
  return color.empty() ? 0 : *std::max_element(color.begin(), color.end());
}

}  // namespace mcis
