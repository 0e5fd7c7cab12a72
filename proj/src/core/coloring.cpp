#include "coloring.hpp"

#include <bit>

namespace mcis {

std::vector<std::uint32_t> greedy_edge_color(std::size_t vertex_count,
                                             const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  // used[v] is a bitset over colors (bit c-1 for color c)
  std::vector<std::vector<std::uint64_t>> used(vertex_count);
  std::vector<std::uint32_t> color(edges.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto& a = used[edges[e].first];
    auto& b = used[edges[e].second];
    const std::size_t words = std::max(a.size(), b.size()) + 1;
    std::size_t pick = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t taken = (w < a.size() ? a[w] : 0) | (w < b.size() ? b[w] : 0);
      if (taken != ~std::uint64_t{0}) {
        pick = w * 64 + static_cast<std::size_t>(std::countr_one(taken));
        break;
      }
    }
    const std::size_t word = pick / 64;
    const std::uint64_t bit = std::uint64_t{1} << (pick % 64);
    if (a.size() <= word) a.resize(word + 1, 0);
    if (b.size() <= word) b.resize(word + 1, 0);
    a[word] |= bit;
    b[word] |= bit;
    color[e] = static_cast<std::uint32_t>(pick + 1);
  }
  return color;
}

bool is_proper_edge_coloring(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                             const std::vector<std::uint32_t>& color) {
  if (color.size() != edges.size()) return false;
  std::vector<std::vector<std::uint32_t>> at(vertex_count);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (color[e] == 0) return false;
    at[edges[e].first].push_back(color[e]);
    if (edges[e].second != edges[e].first) at[edges[e].second].push_back(color[e]);
  }
  for (auto& cs : at) {
    std::sort(cs.begin(), cs.end());
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
  }
  return true;
}

std::size_t max_degree(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> deg(vertex_count, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    if (v != u) ++deg[v];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

}  // namespace mcis
