#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mtavg/height.hpp"

namespace mtavg {

using VertexIndex = std::size_t;
inline constexpr VertexIndex kNoVertex = std::numeric_limits<VertexIndex>::max();

/// One vertex as it appears in a tree file or a builder.
struct NodeSpec {
  std::string id;
  Height height;
  std::optional<std::string> parent;
};

/// A point of the geometric realisation |T|.
///
/// `edge` is the lower endpoint of the hosting edge; the root's index stands
/// for the unbounded ray above the root. A TreePoint is canonical when
/// `height(edge) <= height < height(parent(edge))`; use MergeTree::canonical
/// before comparing points built by hand.
struct TreePoint {
  VertexIndex edge = kNoVertex;
  Height height;

  friend bool operator==(const TreePoint&, const TreePoint&) = default;
};

struct TreeViolation {
  std::string rule;
  std::vector<std::string> vertices;
};

/// Rooted tree with heights strictly decreasing from the root to the leaves.
///
/// The vertex list is kept exactly as supplied (so malformed input can be
/// reported by validate()); every query other than validate() requires a
/// valid tree. Children are stored in id order.
class MergeTree {
 public:
  MergeTree() = default;
  explicit MergeTree(std::vector<NodeSpec> nodes);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  const std::string& id(VertexIndex v) const { return vertices_[v].id; }
  const Height& height(VertexIndex v) const { return vertices_[v].height; }
  VertexIndex parent(VertexIndex v) const { return vertices_[v].parent; }
  std::span<const VertexIndex> children(VertexIndex v) const { return vertices_[v].children; }
  bool is_leaf(VertexIndex v) const { return vertices_[v].children.empty(); }
  VertexIndex root() const { return root_; }

  /// Incident edges, with the root ray counted as one edge at the root.
  std::size_t degree(VertexIndex v) const { return vertices_[v].children.size() + 1; }

  std::optional<VertexIndex> find(const std::string& id) const;
  VertexIndex index_of(const std::string& id) const;

  std::vector<NodeSpec> nodes() const;
  std::vector<VertexIndex> leaves() const;
  Height min_height() const;

  /// The vertex itself, as a point.
  TreePoint point(VertexIndex v) const { return {v, height(v)}; }
  TreePoint canonical(TreePoint p) const;

  /// Vertices ordered so that every child precedes its parent.
  std::vector<VertexIndex> bottom_up_order() const;

 private:
  struct Vertex {
    std::string id;
    Height height;
    VertexIndex parent = kNoVertex;
    std::vector<VertexIndex> children;
  };

  friend std::optional<TreeViolation> first_violation(const MergeTree& tree);

  std::vector<Vertex> vertices_;
  std::unordered_map<std::string, VertexIndex> by_id_;
  std::vector<std::string> unknown_parents_;  // child ids whose parent id did not resolve
  std::vector<std::string> duplicate_ids_;
  std::size_t parentless_ = 0;
  VertexIndex root_ = kNoVertex;
};

struct ValidityReport {
  std::optional<TreeViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

/// Checks the merge-tree invariants and names the first violation found.
ValidityReport validate(const MergeTree& tree);

/// Throws std::invalid_argument naming the violation unless `tree` is valid.
void require_valid(const MergeTree& tree, std::string_view what);

/// The unique point on the upward path from `p` at height `h`.
/// Throws std::invalid_argument when `h` is below `p`.
TreePoint ancestor_at(const MergeTree& tree, const TreePoint& p, const Height& h);

/// True when `hi` is `lo` or an ancestor of `lo`.
bool precedes(const MergeTree& tree, const TreePoint& lo, const TreePoint& hi);

TreePoint nca(const MergeTree& tree, const TreePoint& p1, const TreePoint& p2);

/// height(nca(p1, p2)) - min(height(p1), height(p2)).
Height tree_distance(const MergeTree& tree, const TreePoint& p1, const TreePoint& p2);

/// Lowest vertex that is an ancestor-or-self of both vertices.
VertexIndex nca_vertex(const MergeTree& tree, VertexIndex a, VertexIndex b);

/// Structure-and-height canonical string; equal for trees that are
/// isomorphic with identical heights, ignoring vertex ids.
std::string canonical_form(const MergeTree& tree);

struct SimplifiedTree {
  MergeTree tree;
  /// Per input vertex: the output vertex whose upward edge (or itself)
  /// carries it. A point {v, h} of the input is {host[v], h} in the output.
  std::vector<VertexIndex> host;
};

/// Drops every non-leaf vertex with exactly one child, the root included.
SimplifiedTree simplify(const MergeTree& tree);

}  // namespace mtavg
