#include "trifree/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "trifree/error.hpp"

namespace trifree {

Graph Graph::from_edges(Vertex n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorCode::invalid_argument, "self-loop rejected");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error(ErrorCode::invalid_argument, "duplicate edge rejected");

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);

  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(std::size_t(n) + 1, 0);
  for (Vertex u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + degree[u];
  g.adjacency_.resize(g.offsets_[n]);

  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  for (Vertex u = 0; u < n; ++u)
    std::sort(g.adjacency_.begin() + g.offsets_[u], g.adjacency_.begin() + g.offsets_[u + 1]);

  g.max_degree_ = 0;
  for (Vertex u = 0; u < n; ++u) g.max_degree_ = std::max(g.max_degree_, g.degree(u));
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  // sorted-array intersection per edge
  for (const auto& e : g.edges()) {
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) {
        ++i;
      } else if (a[i] > b[j]) {
        ++j;
      } else {
        return std::array<Vertex, 3>{e.u, e.v, a[i]};
      }
    }
  }
  return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

ProperCheck verify_proper(const Graph& g, const Coloring& c) {
  ProperCheck result;
  if (c.assignment.size() != g.vertex_count())
    throw Error(ErrorCode::invalid_argument, "coloring size does not match graph");
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    ColorId cu = c.assignment[u];
    if (cu == kNoColor) {
      result.uncolored.push_back(u);
    } else if (cu < 0 || std::uint32_t(cu) >= c.num_colors) {
      throw Error(ErrorCode::invalid_argument, "color id out of range");
    }
  }
  if (!result.uncolored.empty()) return result;
  for (const auto& e : g.edges())
    if (c.assignment[e.u] == c.assignment[e.v]) result.violating_edges.push_back(e);
  return result;
}

std::uint32_t count_colors_used(const Coloring& c) {
  std::vector<std::uint8_t> seen(c.num_colors, 0);
  std::uint32_t used = 0;
  for (ColorId a : c.assignment) {
    if (a == kNoColor) continue;
    if (!seen[std::size_t(a)]) {
      seen[std::size_t(a)] = 1;
      ++used;
    }
  }
  return used;
}

}  // namespace trifree
