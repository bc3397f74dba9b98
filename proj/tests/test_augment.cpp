#include <set>

#include "doctest.h"
#include "mtavg/augment.hpp"
#include "support.hpp"

using namespace mtavg;

namespace {

std::set<Height> heights_of(const MergeTree& t) {
  std::set<Height> out;
  for (VertexIndex v = 0; v < t.size(); ++v) out.insert(t.height(v));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("augment");

TEST_CASE("two trees cut on aligned levels") {
  const auto pair = build_augmented(test::fix_a(), test::fix_b(), Height(3, 2));
  std::vector<Height> h1, h2;
  for (const auto& l : pair.levels) {
    h1.push_back(l.h1);
    h2.push_back(l.h2);
  }
  CHECK(h1 == std::vector<Height>{Height(-1, 2), Height(0), Height(2), Height(5)});
  CHECK(h2 == std::vector<Height>{Height(1), Height(3, 2), Height(7, 2), Height(13, 2)});

  // The two-leaf tree gains one cut on a1's edge at 2; the single leaf's ray
  // gets a vertex on every level above b1.
  const auto& a = pair.t1_hat;
  CHECK(a.tree.size() == 4);
  const VertexIndex cut = a.tree.index_of("a1~2");
  CHECK(a.origin[cut].kind == VertexKind::Inserted);
  CHECK(a.origin[cut].source_edge == "a1");
  CHECK(a.tree.parent(cut) == a.tree.index_of("m"));
  CHECK(a.level[a.tree.index_of("a2")] == 2);

  const auto& b = pair.t2_hat;
  CHECK(heights_of(b.tree) == std::set<Height>{Height(1), Height(3, 2), Height(7, 2), Height(13, 2)});
  CHECK(b.tree.id(b.tree.root()) == "b1~3");
  CHECK(b.by_level[0] == std::vector<VertexIndex>{b.tree.index_of("b1")});
}

TEST_CASE("identical trees at zero share their levels") {
  const auto pair = build_augmented(test::fix_a(), test::fix_a(), Height(0));
  // Only a1's edge is cut, at a2's height.
  CHECK(pair.t1_hat.tree.size() == 4);
  CHECK(pair.t2_hat.tree.size() == 4);
  CHECK(pair.t1_hat.tree.find("a1~1").has_value());
  CHECK(pair.t1_hat.level[pair.t1_hat.tree.index_of("a1")] == 0);
  CHECK(pair.t1_hat.level[pair.t1_hat.tree.index_of("a2")] == 1);
  CHECK(pair.t1_hat.level[pair.t1_hat.tree.index_of("m")] == 2);

  const auto p0 = build_augmented(test::fix_p0(), test::fix_p0(), Height(0));
  CHECK(p0.levels.size() == 1);
  CHECK(p0.t1_hat.tree.size() == 1);
}

TEST_CASE("rejects bad input") {
  CHECK_THROWS_AS(build_augmented(test::fix_a(), test::fix_b(), Height(-1)), std::invalid_argument);
  const auto broken = test::tree_of({{"x", "3", "r"}, {"r", "1"}});
  CHECK_THROWS_AS(build_augmented(broken, test::fix_b(), Height(1)), std::invalid_argument);
}

TEST_CASE("inserted ids stay unique when they collide with input ids") {
  const auto t1 = test::tree_of({{"a", "0", "a~1"}, {"a~1", "3"}});
  const auto t2 = test::tree_of({{"b", "1"}});
  const auto pair = build_augmented(t1, t2, Height(0));
  CHECK(validate(pair.t1_hat.tree).ok());
  CHECK(pair.t1_hat.tree.find("a~1'").has_value());
}

TEST_CASE("random pairs: level alignment, round trip, size bound") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const MergeTree t1 = test::corpus_tree(seed, 6);
    const MergeTree t2 = test::corpus_tree(seed + 1000, 6);
    const Height eps(static_cast<std::int64_t>(seed % 7), 2);
    CAPTURE(seed);
    const auto pair = build_augmented(t1, t2, eps);
    const auto& a = pair.t1_hat;
    const auto& b = pair.t2_hat;
    REQUIRE(validate(a.tree).ok());
    REQUIRE(validate(b.tree).ok());

    for (std::size_t i = 1; i < pair.levels.size(); ++i) CHECK(pair.levels[i - 1].h1 < pair.levels[i].h1);
    for (const auto& l : pair.levels) CHECK(l.h2 == l.h1 + eps);
    for (VertexIndex v = 0; v < a.tree.size(); ++v) {
      CHECK(a.tree.height(v) == pair.levels[a.level[v]].h1);
      // Every edge joins consecutive levels, so no level is skipped.
      if (a.tree.parent(v) != kNoVertex) CHECK(a.level[a.tree.parent(v)] == a.level[v] + 1);
    }
    for (VertexIndex w = 0; w < b.tree.size(); ++w) {
      CHECK(b.tree.height(w) == pair.levels[b.level[w]].h2);
      if (b.tree.parent(w) != kNoVertex) CHECK(b.level[b.tree.parent(w)] == b.level[w] + 1);
    }
    // Both roots sit on the top level.
    CHECK(a.level[a.tree.root()] == pair.top_level());
    CHECK(b.level[b.tree.root()] == pair.top_level());

    // Level heights agree wherever both trees reach.
    std::set<Height> shifted;
    for (const auto& h : heights_of(a.tree)) {
      if (h + eps >= t2.min_height()) shifted.insert(h + eps);
    }
    std::set<Height> reached;
    for (const auto& h : heights_of(b.tree)) {
      if (h - eps >= t1.min_height()) reached.insert(h);
    }
    CHECK(shifted == reached);

    CHECK(canonical_form(smooth_inserted(a)) == canonical_form(t1));
    CHECK(canonical_form(smooth_inserted(b)) == canonical_form(t2));
    const std::size_t edges = t1.size() - 1 + 1;  // the root ray counts as an edge
    CHECK(a.tree.size() <= t1.size() + edges * (t1.size() + t2.size()));
  }
}

TEST_SUITE_END();
