#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace trifree {

using Vertex = std::uint32_t;
using ColorId = std::int32_t;

inline constexpr ColorId kNoColor = -1;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph. Adjacency is stored in compressed
/// form with sorted neighbor arrays; the edge list is kept canonical
/// (u < v, lexicographically sorted). Safe for concurrent reads.
class Graph {
 public:
  /// Builds a graph from an edge list. Rejects self-loops, duplicate
  /// edges and out-of-range endpoints.
  static Graph from_edges(Vertex n, std::vector<Edge> edges);

  Vertex vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  Vertex max_degree() const noexcept { return max_degree_; }

  std::span<const Vertex> neighbors(Vertex u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  Vertex degree(Vertex u) const { return Vertex(offsets_[u + 1] - offsets_[u]); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;

 private:
  Graph() = default;

  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  Vertex max_degree_ = 0;
};

/// True iff no three vertices are pairwise adjacent. Runs a sorted
/// neighbor-array intersection for every edge.
bool is_triangle_free(const Graph& g);

/// First triangle found, as a vertex triple, or nullopt.
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

struct Coloring {
  std::vector<ColorId> assignment;  // kNoColor where unassigned
  std::uint32_t num_colors = 0;
};

struct ProperCheck {
  std::vector<Edge> violating_edges;
  std::vector<Vertex> uncolored;
  bool proper() const noexcept { return violating_edges.empty() && uncolored.empty(); }
};

/// Lists every edge whose endpoints share a color. Vertices without an
/// assigned color are reported separately (incomplete coloring).
ProperCheck verify_proper(const Graph& g, const Coloring& c);

/// Distinct colors appearing in the assignment.
std::uint32_t count_colors_used(const Coloring& c);

}  // namespace trifree
