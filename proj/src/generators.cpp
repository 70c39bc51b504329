#include "trifree/generators.hpp"

#include <algorithm>
#include <set>

#include "trifree/error.hpp"
#include "trifree/rng.hpp"

namespace trifree {

Graph gen_complete_bipartite(Vertex m) {
  if (m == 0) throw Error(ErrorCode::invalid_argument, "side size must be positive");
  std::vector<Edge> edges;
  edges.reserve(std::size_t(m) * m);
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = 0; j < m; ++j) edges.push_back({i, m + j});
  return Graph::from_edges(2 * m, std::move(edges));
}

Graph gen_random_bipartite(Vertex n_per_side, double edge_prob, std::uint64_t seed) {
  if (n_per_side == 0) throw Error(ErrorCode::invalid_argument, "side size must be positive");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw Error(ErrorCode::invalid_argument, "edge probability must be in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n_per_side; ++i)
    for (Vertex j = 0; j < n_per_side; ++j)
      if (rng.uniform01() < edge_prob) edges.push_back({i, n_per_side + j});
  return Graph::from_edges(2 * n_per_side, std::move(edges));
}

Graph gen_random_triangle_free(Vertex n, Vertex target_degree, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "vertex count must be positive");
  if (target_degree >= n)
    throw Error(ErrorCode::invalid_argument, "target degree must be below vertex count");

  SplitMix64 rng(seed);
  std::vector<std::set<Vertex>> adj(n);
  std::vector<Vertex> deg(n, 0);

  const std::uint64_t budget = 50ull * n;  // consecutive proposals without acceptance
  std::uint64_t rejected = 0;
  std::vector<Edge> edges;

  auto common_neighbor = [&](Vertex u, Vertex v) {
    const auto& small = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    const auto& large = adj[u].size() <= adj[v].size() ? adj[v] : adj[u];
    return std::any_of(small.begin(), small.end(),
                       [&](Vertex w) { return large.count(w) != 0; });
  };

  while (rejected < budget) {
    Vertex u = Vertex(rng.below(n));
    Vertex v = Vertex(rng.below(n));
    if (u == v || adj[u].count(v) || deg[u] >= target_degree || deg[v] >= target_degree ||
        common_neighbor(u, v)) {
      ++rejected;
      continue;
    }
    adj[u].insert(v);
    adj[v].insert(u);
    ++deg[u];
    ++deg[v];
    edges.push_back({std::min(u, v), std::max(u, v)});
    rejected = 0;
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace trifree
