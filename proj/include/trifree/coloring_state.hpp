#pragma once

#include <cstdint>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

/// Mutable per-trial coloring state: vertex status, palettes S_t(u),
/// conflict counters d_t(u,c) and uncolored degrees eta_t(u).
///
/// Counter conventions: for an uncolored vertex u, dcount(u,c) equals
/// |{v adjacent to u : v uncolored, c in palette(v)}| for every c (not
/// just palette members), and uncolored_degree(u) = |{v adjacent to u :
/// v uncolored}|. Counters of colored vertices are dead and must not be
/// read; colored vertices have empty palettes.
class ColoringState {
 public:
  ColoringState(const Graph& g, std::uint32_t num_colors);

  Vertex vertex_count() const noexcept { return Vertex(color_.size()); }
  std::uint32_t num_colors() const noexcept { return num_colors_; }
  std::uint32_t round() const noexcept { return round_; }
  void advance_round() noexcept { ++round_; }

  bool is_colored(Vertex u) const { return color_[u] != kNoColor; }
  ColorId color_of(Vertex u) const { return color_[u]; }
  std::uint32_t uncolored_count() const noexcept { return uncolored_count_; }

  bool palette_has(Vertex u, ColorId c) const { return in_palette_[slot(u, c)] != 0; }
  std::uint32_t palette_size(Vertex u) const { return palette_size_[u]; }

  /// Total palette slots remaining across uncolored vertices. Zero means
  /// the state is a fixed point: no phase can change anything.
  std::uint64_t palette_mass() const noexcept { return palette_mass_; }

  std::uint32_t dcount(Vertex u, ColorId c) const { return dcount_[slot(u, c)]; }
  std::uint32_t uncolored_degree(Vertex u) const { return uncolored_degree_[u]; }

  // --- mutators used by the engine phases ---

  /// Permanently colors u, clears its palette and removes its
  /// contribution from every neighbor's counters.
  void mark_colored(const Graph& g, Vertex u, ColorId c);

  /// Removes c from u's palette and decrements dcount(v,c) at every
  /// neighbor v. u must be uncolored and hold c.
  void remove_palette_color(const Graph& g, Vertex u, ColorId c);

  /// Full recount of dcount and uncolored_degree from definitions;
  /// throws if any incremental counter disagrees. Debug aid.
  void check_counters(const Graph& g) const;

 private:
  std::size_t slot(Vertex u, ColorId c) const {
    return std::size_t(u) * num_colors_ + std::size_t(c);
  }

  std::uint32_t num_colors_;
  std::uint32_t round_ = 0;
  std::uint32_t uncolored_count_;
  std::uint64_t palette_mass_;
  std::vector<ColorId> color_;
  std::vector<std::uint8_t> in_palette_;
  std::vector<std::uint32_t> palette_size_;
  std::vector<std::uint32_t> dcount_;
  std::vector<std::uint32_t> uncolored_degree_;
};

/// Initial state: every vertex uncolored with the full palette
/// {0..num_colors-1}, dcount(u,c) = deg(u), uncolored_degree = deg.
/// Rejects graphs containing a triangle (reported with the violating
/// triple) unless check_triangle_free is false.
ColoringState init_state(const Graph& g, std::uint32_t num_colors,
                         bool check_triangle_free = true);

}  // namespace trifree
