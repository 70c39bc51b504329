#pragma once

#include <cstdint>

#include "trifree/graph.hpp"

namespace trifree {

/// Sequential greedy coloring in vertex order with fresh colors as
/// needed. Uses at most max_degree + 1 colors.
std::uint32_t greedy_baseline_colors(const Graph& g);

}  // namespace trifree
