#include "trifree/baseline.hpp"

#include <vector>

namespace trifree {

std::uint32_t greedy_baseline_colors(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<ColorId> color(n, kNoColor);
  std::vector<std::uint8_t> used(std::size_t(g.max_degree()) + 1, 0);
  std::uint32_t colors_used = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u))
      if (color[v] != kNoColor) used[std::size_t(color[v])] = 1;
    ColorId c = 0;
    while (used[std::size_t(c)]) ++c;
    color[u] = c;
    colors_used = std::max(colors_used, std::uint32_t(c) + 1);
    for (Vertex v : g.neighbors(u))
      if (color[v] != kNoColor) used[std::size_t(color[v])] = 0;
  }
  return n == 0 ? 0 : colors_used;
}

}  // namespace trifree
