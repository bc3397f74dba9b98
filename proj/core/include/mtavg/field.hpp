#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtavg/merge_tree.hpp"

namespace mtavg::field {

struct GraphVertex {
  std::string id;
  Height value;
};

/// Scalar function on the vertices of a connected graph.
struct ScalarGraph {
  std::vector<GraphVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // vertex indices, unordered
};

enum class Orientation { Sublevel, Superlevel };
enum class Connectivity { Four, Eight };

/// Occupancy grid, row-major.
struct GridMask {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<bool> cells;
  Connectivity connectivity = Connectivity::Four;

  bool at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
};

/// `#` occupied, `.` empty, one row per line; blank lines are ignored.
/// Throws std::invalid_argument on ragged rows, other characters or an empty mask.
GridMask parse_grid_mask(std::string_view text, Connectivity connectivity = Connectivity::Four);

/// Throws std::invalid_argument unless ids are unique, edges are in range
/// and the graph is non-empty and connected.
void validate(const ScalarGraph& g);

/// Merge tree of the sublevel sets (or, for Superlevel, of the sublevel sets
/// of the negated field, so heights are the negated values).
///
/// Vertices with equal values are swept together: a new component becomes a
/// leaf, a component joining two or more older ones becomes one merge vertex.
/// Tree vertices take the id of the lowest-index graph vertex that created them.
MergeTree merge_tree_from_field(const ScalarGraph& g, Orientation orientation);

/// Graph of occupied cells (ids `r<row>c<col>`) whose value is the mean
/// shortest-path distance to a set of source cells. All cells are sources
/// when `samples` reaches the cell count; otherwise `samples` cells drawn
/// with `seed`. Throws std::invalid_argument for samples == 0 or a
/// disconnected mask.
ScalarGraph geodesic_field(const GridMask& mask, std::size_t samples, std::uint64_t seed);

}  // namespace mtavg::field
