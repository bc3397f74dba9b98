#pragma once

#include <string>
#include <vector>

#include "mtavg/merge_tree.hpp"

namespace mtavg {

enum class VertexKind { Original, Inserted };

struct VertexOrigin {
  VertexKind kind = VertexKind::Original;
  /// Id of the input vertex whose upward edge (or root ray) hosts this vertex.
  std::string source_edge;
};

/// An input tree cut at every level height.
struct AugmentedTree {
  MergeTree tree;
  std::vector<std::size_t> level;     // per vertex
  std::vector<VertexOrigin> origin;   // per vertex
  std::vector<std::vector<VertexIndex>> by_level;  // vertices of each level, in id order

  std::size_t level_of(VertexIndex v) const { return level[v]; }
};

struct Level {
  Height h1;  // height in T1-hat
  Height h2;  // height in T2-hat, always h1 + epsilon
};

/// Both augmented trees for one epsilon, with their levels aligned so that
/// level i sits at h1 in T1-hat and at h1 + epsilon in T2-hat.
struct AugmentedPair {
  AugmentedTree t1_hat;
  AugmentedTree t2_hat;
  Height epsilon;
  std::vector<Level> levels;  // strictly increasing

  std::size_t top_level() const { return levels.size() - 1; }
};

/// Level heights (T1 scale) used for `eps`: every f-value together with every
/// g-value shifted down by `eps`, sorted and deduplicated.
std::vector<Height> level_heights(const MergeTree& t1, const MergeTree& t2, const Height& eps);

/// Cuts both trees at every level height. Inserted vertices get ids
/// `<source edge id>~<level index>`, so the result is reproducible.
/// Throws std::invalid_argument for negative eps or invalid trees.
AugmentedPair build_augmented(const MergeTree& t1, const MergeTree& t2, const Height& eps);

/// Removes the inserted vertices again, recovering the input tree.
MergeTree smooth_inserted(const AugmentedTree& t);

}  // namespace mtavg
