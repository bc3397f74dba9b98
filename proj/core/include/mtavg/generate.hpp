#pragma once

#include <cstddef>
#include <cstdint>

#include "mtavg/merge_tree.hpp"

namespace mtavg {

/// Pseudo-random merge tree with `leaves` leaves and integer heights.
///
/// Leaves get heights in [lo, hi - 1]; sweeping t = lo + 1 .. hi, pairs of
/// existing components are merged at t at random, and whatever is left is
/// joined at hi. Leaf ids are `l<i>`, merge ids `n<i>`. The output depends
/// only on the arguments. A single leaf may sit anywhere in [lo, hi].
/// Throws std::invalid_argument for leaves == 0 or an empty range.
MergeTree random_merge_tree(std::size_t leaves, std::uint64_t seed, std::int64_t lo, std::int64_t hi);

/// Spine s0 < s1 < ... with one leaf hanging from each spine vertex (two
/// from s0): spine heights 10, 20, ..., leaves at 0 and 10*i + 5 + offset.
/// `offset` must lie in [0, 4] so the tree stays valid.
MergeTree caterpillar(std::size_t leaves, std::int64_t offset);

}  // namespace mtavg
