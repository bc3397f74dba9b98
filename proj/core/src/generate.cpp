#include "mtavg/generate.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtavg {

namespace {

// Explicit modular draws: std::uniform_int_distribution differs between
// standard libraries, which would break byte-identical output.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

MergeTree random_merge_tree(std::size_t leaves, std::uint64_t seed, std::int64_t lo, std::int64_t hi) {
  if (leaves == 0) throw std::invalid_argument("a tree needs at least one leaf");
  if (hi < lo || (leaves > 1 && hi == lo)) {
    throw std::invalid_argument("height range " + std::to_string(lo) + ".." + std::to_string(hi) + " is empty");
  }
  std::mt19937_64 rng(seed);
  std::vector<NodeSpec> nodes;
  if (leaves == 1) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    nodes.push_back({"l0", Height(lo + static_cast<std::int64_t>(draw(rng, span))), std::nullopt});
    return MergeTree(std::move(nodes));
  }

  const auto span = static_cast<std::uint64_t>(hi - lo);
  for (std::size_t i = 0; i < leaves; ++i) {
    nodes.push_back({"l" + std::to_string(i), Height(lo + static_cast<std::int64_t>(draw(rng, span))), std::nullopt});
  }
  std::vector<std::size_t> tops;  // components by their current top node
  for (std::size_t i = 0; i < leaves; ++i) tops.push_back(i);
  std::size_t merges = 0;

  auto join = [&](std::vector<std::size_t> parts, std::int64_t t) {
    const std::size_t node = nodes.size();
    const std::string id = "n" + std::to_string(merges++);
    nodes.push_back({id, Height(t), std::nullopt});
    for (std::size_t p : parts) nodes[p].parent = id;
    return node;
  };

  for (std::int64_t t = lo + 1; t < hi && tops.size() > 1; ++t) {
    std::vector<std::size_t> ready, waiting;
    for (std::size_t c : tops) (nodes[c].height < Height(t) ? ready : waiting).push_back(c);
    std::vector<std::size_t> made;
    while (ready.size() >= 2 && draw(rng, 3) == 0) {
      const std::size_t i = draw(rng, ready.size());
      const std::size_t a = ready[i];
      ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(i));
      const std::size_t j = draw(rng, ready.size());
      const std::size_t b = ready[j];
      ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(j));
      made.push_back(join({a, b}, t));
    }
    tops = std::move(ready);
    tops.insert(tops.end(), waiting.begin(), waiting.end());
    tops.insert(tops.end(), made.begin(), made.end());
  }
  if (tops.size() > 1) join(tops, hi);
  return MergeTree(std::move(nodes));
}

MergeTree caterpillar(std::size_t leaves, std::int64_t offset) {
  if (leaves < 2) throw std::invalid_argument("a caterpillar needs at least two leaves");
  if (offset < 0 || offset > 4) throw std::invalid_argument("caterpillar offset must lie in [0, 4]");
  std::vector<NodeSpec> nodes;
  const std::size_t spine = leaves - 1;
  auto spine_id = [](std::size_t i) { return "s" + std::to_string(i); };
  for (std::size_t i = 0; i < spine; ++i) {
    std::optional<std::string> up;
    if (i + 1 < spine) up = spine_id(i + 1);
    nodes.push_back({spine_id(i), Height(10 * static_cast<std::int64_t>(i + 1)), up});
  }
  nodes.push_back({"l0", Height(0), spine_id(0)});
  for (std::size_t i = 0; i < spine; ++i) {
    nodes.push_back({"l" + std::to_string(i + 1), Height(10 * static_cast<std::int64_t>(i) + 5 + offset), spine_id(i)});
  }
  return MergeTree(std::move(nodes));
}

}  // namespace mtavg
