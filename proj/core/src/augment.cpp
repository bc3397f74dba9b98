#include "mtavg/augment.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace mtavg {

namespace {

std::size_t level_index(const std::vector<Height>& heights, const Height& h) {
  auto it = std::lower_bound(heights.begin(), heights.end(), h);
  if (it == heights.end() || *it != h) throw std::logic_error("height " + h.str() + " is not a level");
  return static_cast<std::size_t>(it - heights.begin());
}

/// `heights` are the level heights in this tree's own scale.
AugmentedTree augment_tree(const MergeTree& t, const std::vector<Height>& heights) {
  std::vector<NodeSpec> nodes;
  std::vector<std::size_t> level;
  std::vector<VertexOrigin> origin;
  std::unordered_set<std::string> used;
  for (VertexIndex v = 0; v < t.size(); ++v) used.insert(t.id(v));

  auto fresh_id = [&](const std::string& edge, std::size_t lvl) {
    std::string id = edge + "~" + std::to_string(lvl);
    while (!used.insert(id).second) id += "'";
    return id;
  };

  for (VertexIndex v = 0; v < t.size(); ++v) {
    const std::size_t lo = level_index(heights, t.height(v));
    // Levels strictly above v on its edge, or up to the top on the root ray.
    std::size_t hi = heights.size();
    if (t.parent(v) != kNoVertex) hi = level_index(heights, t.height(t.parent(v)));

    nodes.push_back({t.id(v), t.height(v), std::nullopt});
    level.push_back(lo);
    origin.push_back({VertexKind::Original, t.id(v)});
    const std::size_t own = nodes.size() - 1;
    std::size_t prev = own;
    for (std::size_t l = lo + 1; l < hi; ++l) {
      std::string id = fresh_id(t.id(v), l);
      nodes[prev].parent = id;
      nodes.push_back({id, heights[l], std::nullopt});
      level.push_back(l);
      origin.push_back({VertexKind::Inserted, t.id(v)});
      prev = nodes.size() - 1;
    }
    if (t.parent(v) != kNoVertex) nodes[prev].parent = t.id(t.parent(v));
  }

  AugmentedTree out{MergeTree(std::move(nodes)), std::move(level), std::move(origin), {}};
  out.by_level.resize(heights.size());
  for (VertexIndex v = 0; v < out.tree.size(); ++v) out.by_level[out.level[v]].push_back(v);
  for (auto& bucket : out.by_level) {
    std::sort(bucket.begin(), bucket.end(),
              [&](VertexIndex a, VertexIndex b) { return out.tree.id(a) < out.tree.id(b); });
  }
  return out;
}

}  // namespace

std::vector<Height> level_heights(const MergeTree& t1, const MergeTree& t2, const Height& eps) {
  std::vector<Height> hs;
  hs.reserve(t1.size() + t2.size());
  for (VertexIndex v = 0; v < t1.size(); ++v) hs.push_back(t1.height(v));
  for (VertexIndex w = 0; w < t2.size(); ++w) hs.push_back(t2.height(w) - eps);
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

AugmentedPair build_augmented(const MergeTree& t1, const MergeTree& t2, const Height& eps) {
  if (eps < Height(0)) throw std::invalid_argument("epsilon must be non-negative");
  require_valid(t1, "T1");
  require_valid(t2, "T2");

  auto h1 = level_heights(t1, t2, eps);
  std::vector<Height> h2;
  h2.reserve(h1.size());
  for (const auto& h : h1) h2.push_back(h + eps);

  AugmentedPair pair;
  pair.epsilon = eps;
  pair.t1_hat = augment_tree(t1, h1);
  pair.t2_hat = augment_tree(t2, h2);
  pair.levels.reserve(h1.size());
  for (std::size_t i = 0; i < h1.size(); ++i) pair.levels.push_back({h1[i], h2[i]});
  return pair;
}

MergeTree smooth_inserted(const AugmentedTree& t) {
  const auto& tree = t.tree;
  auto kept_parent = [&](VertexIndex v) {
    VertexIndex p = tree.parent(v);
    while (p != kNoVertex && t.origin[p].kind == VertexKind::Inserted) p = tree.parent(p);
    return p;
  };
  std::vector<NodeSpec> nodes;
  for (VertexIndex v = 0; v < tree.size(); ++v) {
    if (t.origin[v].kind == VertexKind::Inserted) continue;
    NodeSpec n{tree.id(v), tree.height(v), std::nullopt};
    if (auto p = kept_parent(v); p != kNoVertex) n.parent = tree.id(p);
    nodes.push_back(std::move(n));
  }
  return MergeTree(std::move(nodes));
}

}  // namespace mtavg
