#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <tuple>
#include <vector>

#include "mtavg/generate.hpp"
#include "mtavg/io.hpp"
#include "mtavg/merge_tree.hpp"

namespace mtavg::test {

struct Row {
  const char* id;
  const char* height;
  const char* parent = nullptr;
};

inline MergeTree tree_of(std::initializer_list<Row> rows) {
  std::vector<NodeSpec> nodes;
  for (const auto& r : rows) {
    NodeSpec n{r.id, Height::parse(r.height), std::nullopt};
    if (r.parent) n.parent = r.parent;
    nodes.push_back(std::move(n));
  }
  return MergeTree(std::move(nodes));
}

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(MTAVG_FIXTURE_DIR) / name;
}

// Leaves at 0 and 2 joined at 5.
inline MergeTree fix_a() { return tree_of({{"a1", "0", "m"}, {"a2", "2", "m"}, {"m", "5"}}); }
// Single leaf at 1.
inline MergeTree fix_b() { return tree_of({{"b1", "1"}}); }
inline MergeTree fix_p0() { return tree_of({{"p", "0"}}); }
inline MergeTree fix_p4() { return tree_of({{"q", "4"}}); }

/// Seeded corpus tree: 1..max_leaves leaves, heights in lo..hi.
inline MergeTree corpus_tree(std::uint64_t seed, std::size_t max_leaves, std::int64_t lo = 0, std::int64_t hi = 20) {
  const std::size_t leaves = 1 + static_cast<std::size_t>(seed * 2654435761u % max_leaves);
  return random_merge_tree(leaves, seed, lo, hi);
}

/// Pair `i` of the seeded random corpus shared by the property and acceptance checks.
inline std::pair<MergeTree, MergeTree> corpus_pair(std::uint64_t i, std::size_t max_leaves, std::int64_t hi = 20) {
  return {corpus_tree(2 * i + 1, max_leaves, 0, hi), corpus_tree(2 * i + 2, max_leaves, 0, hi)};
}

}  // namespace mtavg::test
