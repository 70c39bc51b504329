#pragma once

#include <cstdint>

#include "trifree/graph.hpp"

namespace trifree {

/// K_{m,m}: left vertices 0..m-1, right vertices m..2m-1, all cross edges.
Graph gen_complete_bipartite(Vertex m);

/// Bipartite G(m, m, p): each of the m^2 cross edges is included
/// independently with probability edge_prob. Deterministic per seed.
Graph gen_random_bipartite(Vertex n_per_side, double edge_prob, std::uint64_t seed);

/// Greedy rejection sampler: repeatedly proposes a uniform random pair
/// (u, v) and accepts it as an edge iff u and v share no common neighbor
/// and both endpoint degrees are below target_degree. Stops after 50*n
/// consecutive proposals without an acceptance. Triangle-free by
/// construction; deterministic per seed.
Graph gen_random_triangle_free(Vertex n, Vertex target_degree, std::uint64_t seed);

}  // namespace trifree
