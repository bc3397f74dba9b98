#include <random>

#include "doctest.h"
#include "mtavg/field.hpp"
#include "support.hpp"

using namespace mtavg;
using namespace mtavg::field;

namespace {

ScalarGraph path_of(std::initializer_list<std::int64_t> values) {
  ScalarGraph g;
  for (auto v : values) g.vertices.push_back({"x" + std::to_string(g.vertices.size()), Height(v)});
  for (std::size_t i = 1; i < g.vertices.size(); ++i) g.edges.emplace_back(i - 1, i);
  return g;
}

std::size_t components_below(const ScalarGraph& g, const Height& t) {
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(g.vertices.size(), false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < g.vertices.size(); ++s) {
    if (seen[s] || g.vertices[s].value > t) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto u : adj[v]) {
        if (!seen[u] && g.vertices[u].value <= t) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
  }
  return count;
}

std::size_t points_at(const MergeTree& t, const Height& h) {
  std::size_t n = 0;
  for (VertexIndex v = 0; v < t.size(); ++v) {
    if (t.height(v) > h) continue;
    if (t.parent(v) == kNoVertex || t.height(t.parent(v)) > h) ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE_BEGIN("field");

TEST_CASE("a path with a bump gives two leaves and a join") {
  const auto t = merge_tree_from_field(path_of({0, 5, 2}), Orientation::Sublevel);
  CHECK(canonical_form(t) == canonical_form(test::fix_a()));
  CHECK(t.id(t.root()) == "x1");
  CHECK(t.find("x0").has_value());
  CHECK(t.find("x2").has_value());
}

TEST_CASE("trivial fields") {
  const auto one = merge_tree_from_field(path_of({7}), Orientation::Sublevel);
  REQUIRE(one.size() == 1);
  CHECK(one.height(0) == Height(7));

  const auto rising = merge_tree_from_field(path_of({0, 1, 2, 3}), Orientation::Sublevel);
  REQUIRE(rising.size() == 1);
  CHECK(rising.id(0) == "x0");

  // A flat plateau is one component.
  const auto flat = merge_tree_from_field(path_of({4, 4, 4}), Orientation::Sublevel);
  CHECK(flat.size() == 1);
}

TEST_CASE("plateaus that bridge older components make one join") {
  // Three basins joined by one flat ridge.
  ScalarGraph g = path_of({0, 3, 1, 3, 2});
  auto t = merge_tree_from_field(g, Orientation::Sublevel);
  CHECK(validate(t).ok());
  CHECK(t.size() == 4);
  CHECK(t.height(t.root()) == Height(3));
  CHECK(t.children(t.root()).size() == 3);
}

TEST_CASE("geodesic field on small bars") {
  const auto bar = parse_grid_mask("###\n");
  const auto g = geodesic_field(bar, 3, 1);
  REQUIRE(g.vertices.size() == 3);
  CHECK(g.vertices[0].value == Height(1));
  CHECK(g.vertices[1].value == Height(2, 3));
  CHECK(g.vertices[2].value == Height(1));
  CHECK(g.vertices[1].id == "r0c1");

  const auto t = merge_tree_from_field(g, Orientation::Superlevel);
  CHECK(canonical_form(t) ==
        canonical_form(test::tree_of({{"u", "-1", "r"}, {"v", "-1", "r"}, {"r", "-2/3"}})));

  const auto five = geodesic_field(parse_grid_mask("#####"), 5, 1);
  std::vector<Height> values;
  for (const auto& v : five.vertices) values.push_back(v.value);
  CHECK(values == std::vector<Height>{Height(2), Height(7, 5), Height(6, 5), Height(7, 5), Height(2)});
  const auto t5 = merge_tree_from_field(five, Orientation::Superlevel);
  CHECK(t5.size() == 3);
  CHECK(t5.height(t5.root()) == Height(-6, 5));
}

TEST_CASE("sampled sources are reproducible") {
  const auto mask = parse_grid_mask("####\n#..#\n####\n");
  const auto a = geodesic_field(mask, 3, 42);
  const auto b = geodesic_field(mask, 3, 42);
  REQUIRE(a.vertices.size() == 10);
  for (std::size_t i = 0; i < a.vertices.size(); ++i) CHECK(a.vertices[i].value == b.vertices[i].value);
  CHECK_THROWS_AS(geodesic_field(mask, 0, 1), std::invalid_argument);
}

TEST_CASE("components agree with the tree at every threshold") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 8;
    const std::size_t cols = 1 + rng() % 8;
    ScalarGraph g;
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        g.vertices.push_back({"r" + std::to_string(r) + "c" + std::to_string(c),
                              Height(static_cast<std::int64_t>(rng() % 6))});
        const std::size_t i = r * cols + c;
        if (c > 0) g.edges.emplace_back(i - 1, i);
        if (r > 0) g.edges.emplace_back(i - cols, i);
      }
    }
    CAPTURE(trial);
    const auto t = merge_tree_from_field(g, Orientation::Sublevel);
    REQUIRE(validate(t).ok());
    for (std::int64_t h = 0; h < 6; ++h) CHECK(points_at(t, Height(h)) == components_below(g, Height(h)));

    ScalarGraph neg = g;
    for (auto& v : neg.vertices) v.value = -v.value;
    CHECK(canonical_form(merge_tree_from_field(g, Orientation::Superlevel)) ==
          canonical_form(merge_tree_from_field(neg, Orientation::Sublevel)));
  }
}

TEST_CASE("bad inputs") {
  ScalarGraph split = path_of({0, 1});
  split.edges.clear();
  CHECK_THROWS_AS(merge_tree_from_field(split, Orientation::Sublevel), std::invalid_argument);
  CHECK_THROWS_AS(merge_tree_from_field(ScalarGraph{}, Orientation::Sublevel), std::invalid_argument);
  ScalarGraph dup = path_of({0, 1});
  dup.vertices[1].id = "x0";
  CHECK_THROWS_AS(validate(dup), std::invalid_argument);

  CHECK_THROWS_AS(parse_grid_mask("##\n#\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid_mask("#x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid_mask("..\n"), std::invalid_argument);
  CHECK_THROWS_AS(geodesic_field(parse_grid_mask("#.#"), 2, 1), std::invalid_argument);
  // Diagonal neighbours only count with 8-connectivity.
  CHECK_THROWS_AS(geodesic_field(parse_grid_mask("#.\n.#"), 2, 1), std::invalid_argument);
  CHECK(geodesic_field(parse_grid_mask("#.\n.#", Connectivity::Eight), 2, 1).vertices.size() == 2);
}

TEST_SUITE_END();
