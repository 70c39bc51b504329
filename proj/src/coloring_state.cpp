#include "trifree/coloring_state.hpp"

#include <string>

#include "trifree/error.hpp"

namespace trifree {

ColoringState::ColoringState(const Graph& g, std::uint32_t num_colors)
    : num_colors_(num_colors),
      uncolored_count_(g.vertex_count()),
      palette_mass_(std::uint64_t(g.vertex_count()) * num_colors),
      color_(g.vertex_count(), kNoColor),
      in_palette_(std::size_t(g.vertex_count()) * num_colors, 1),
      palette_size_(g.vertex_count(), num_colors),
      dcount_(std::size_t(g.vertex_count()) * num_colors, 0),
      uncolored_degree_(g.vertex_count(), 0) {
  if (num_colors == 0) throw Error(ErrorCode::invalid_argument, "need at least one color");
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    uncolored_degree_[u] = g.degree(u);
    for (std::uint32_t c = 0; c < num_colors_; ++c) dcount_[slot(u, ColorId(c))] = g.degree(u);
  }
}

void ColoringState::mark_colored(const Graph& g, Vertex u, ColorId c) {
  // remove u's contribution: it leaves every neighbor's uncolored set,
  // and its whole current palette leaves their dcounts
  for (Vertex v : g.neighbors(u)) {
    --uncolored_degree_[v];
    for (std::uint32_t pc = 0; pc < num_colors_; ++pc)
      if (in_palette_[slot(u, ColorId(pc))]) --dcount_[slot(v, ColorId(pc))];
  }
  for (std::uint32_t pc = 0; pc < num_colors_; ++pc) in_palette_[slot(u, ColorId(pc))] = 0;
  palette_mass_ -= palette_size_[u];
  palette_size_[u] = 0;
  color_[u] = c;
  --uncolored_count_;
}

void ColoringState::remove_palette_color(const Graph& g, Vertex u, ColorId c) {
  in_palette_[slot(u, c)] = 0;
  --palette_size_[u];
  --palette_mass_;
  for (Vertex v : g.neighbors(u)) --dcount_[slot(v, c)];
}

void ColoringState::check_counters(const Graph& g) const {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (is_colored(u)) {
      if (palette_size_[u] != 0)
        throw Error(ErrorCode::invalid_argument,
                    "counter check: colored vertex with non-empty palette");
      continue;
    }
    std::uint32_t eta = 0;
    for (Vertex v : g.neighbors(u))
      if (!is_colored(v)) ++eta;
    if (eta != uncolored_degree_[u])
      throw Error(ErrorCode::invalid_argument,
                  "counter check: uncolored degree mismatch at vertex " + std::to_string(u));
    for (std::uint32_t c = 0; c < num_colors_; ++c) {
      std::uint32_t expect = 0;
      for (Vertex v : g.neighbors(u))
        if (!is_colored(v) && in_palette_[slot(v, ColorId(c))]) ++expect;
      if (expect != dcount_[slot(u, ColorId(c))])
        throw Error(ErrorCode::invalid_argument,
                    "counter check: dcount mismatch at vertex " + std::to_string(u));
    }
    std::uint32_t psize = 0;
    for (std::uint32_t c = 0; c < num_colors_; ++c)
      if (in_palette_[slot(u, ColorId(c))]) ++psize;
    if (psize != palette_size_[u])
      throw Error(ErrorCode::invalid_argument,
                  "counter check: palette size mismatch at vertex " + std::to_string(u));
  }
}

ColoringState init_state(const Graph& g, std::uint32_t num_colors, bool check_triangle_free) {
  if (check_triangle_free) {
    if (auto tri = find_triangle(g))
      throw Error(ErrorCode::not_triangle_free,
                  "graph has triangle (" + std::to_string((*tri)[0]) + ", " +
                      std::to_string((*tri)[1]) + ", " + std::to_string((*tri)[2]) + ")");
  }
  return ColoringState(g, num_colors);
}

}  // namespace trifree
