#include "doctest.h"
#include "mtavg/average.hpp"
#include "mtavg/io.hpp"
#include "mtavg/verify.hpp"
#include "support.hpp"
#include "json.hpp"

using namespace mtavg;

TEST_SUITE_BEGIN("io");

TEST_CASE("tree files round trip") {
  const auto t = test::tree_of({{"x", "-1/3", "r"}, {"y", "0.5", "r"}, {"r", "7"}});
  const auto back = io::parse_tree(io::format_tree(t));
  REQUIRE(back.size() == 3);
  CHECK(back.height(back.index_of("x")) == Height(-1, 3));
  CHECK(back.height(back.index_of("y")) == Height(1, 2));
  CHECK(io::format_tree(back) == io::format_tree(t));
  CHECK(nlohmann::json::parse(io::format_tree(t))["nodes"][1]["height"] == "1/2");
}

TEST_CASE("fixture files load") {
  CHECK(canonical_form(io::load_tree(test::fixture("fix_a.json"))) == canonical_form(test::fix_a()));
  CHECK(canonical_form(io::load_tree(test::fixture("fix_b.json"))) == canonical_form(test::fix_b()));
  CHECK(io::load_tree(test::fixture("fix_p4.json")).height(0) == Height(4));
  const auto g = io::parse_scalar_graph(io::read_text(test::fixture("path_052.json")));
  CHECK(g.vertices.size() == 3);
  CHECK(g.edges.size() == 2);
  const auto again = io::parse_scalar_graph(io::format_scalar_graph(g));
  CHECK(again.vertices[1].value == Height(5));
}

TEST_CASE("parse errors say where") {
  CHECK_THROWS_WITH_AS(io::parse_tree("{"), doctest::Contains("invalid JSON"), io::ParseError);
  CHECK_THROWS_WITH_AS(io::parse_tree(R"({"format":"other","nodes":[]})"), doctest::Contains("format"),
                       io::ParseError);
  CHECK_THROWS_WITH_AS(io::parse_tree(R"({"format":"merge-tree/v1","nodes":[{"id":"a","height":1.5}]})"),
                       doctest::Contains("nodes[0].height"), io::ParseError);
  CHECK_THROWS_WITH_AS(io::parse_tree(R"({"format":"merge-tree/v1","nodes":[{"id":"a","height":"1e3"}]})"),
                       doctest::Contains("nodes[0].height"), io::ParseError);
  CHECK_THROWS_WITH_AS(io::parse_tree(R"({"format":"merge-tree/v1","nodes":[{"height":"1"}]})"),
                       doctest::Contains("nodes[0].id"), io::ParseError);
  CHECK_THROWS_AS(io::parse_scalar_graph(R"({"format":"scalar-graph/v1","vertices":[{"id":"a","value":"0"}],
                                             "edges":[["a","zz"]]})"),
                  io::ParseError);
  CHECK_THROWS_WITH_AS(io::load_tree("/nonexistent/tree.json"), doctest::Contains("/nonexistent/tree.json"),
                       io::ParseError);
  // Structurally fine JSON can still be an invalid tree; that is checked separately.
  CHECK_FALSE(validate(io::parse_tree(R"({"format":"merge-tree/v1","nodes":[]})")).ok());
}

TEST_CASE("documents for the average") {
  const auto r = average_tree(test::fix_a(), test::fix_b());
  const auto gamma = nlohmann::json::parse(io::format_gamma(r));
  CHECK(gamma["format"] == "tree-map/v1");
  CHECK(gamma["kind"] == "gamma");
  CHECK(gamma["epsilon"] == "3/2");
  CHECK(gamma["provenance"]["b1"] == "GRAFTED_T2");

  const auto witness = nlohmann::json::parse(io::format_witness(r.witness));
  CHECK(witness["kind"] == "witness");
  CHECK(witness.contains("t1_hat"));

  const auto cert = nlohmann::json::parse(
      io::format_certificate(check_midpoint(test::fix_a(), test::fix_b(), r), r.epsilon));
  CHECK(cert["format"] == "midpoint-certificate/v1");
}

TEST_CASE("rendering is deterministic") {
  const auto dot = io::render_dot(test::fix_a());
  CHECK(dot.starts_with("digraph merge_tree {"));
  CHECK(dot.find("\"a1\" -> \"m\"") != std::string::npos);
  CHECK(dot.find("a1@0") != std::string::npos);
  const auto shuffled = test::tree_of({{"m", "5"}, {"a2", "2", "m"}, {"a1", "0", "m"}});
  CHECK(io::render_dot(shuffled) == io::render_dot(test::tree_of({{"m", "5"}, {"a2", "2", "m"}, {"a1", "0", "m"}})));
}

TEST_CASE("generators") {
  CHECK(io::format_tree(random_merge_tree(6, 9, 0, 20)) == io::format_tree(random_merge_tree(6, 9, 0, 20)));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto t = random_merge_tree(1 + seed % 8, seed, 0, 20);
    CHECK(validate(t).ok());
    CHECK(t.leaves().size() == 1 + seed % 8);
    for (VertexIndex v = 0; v < t.size(); ++v) {
      CHECK(t.height(v) >= Height(0));
      CHECK(t.height(v) <= Height(20));
    }
  }
  CHECK_THROWS_AS(random_merge_tree(0, 1, 0, 20), std::invalid_argument);
  CHECK_THROWS_AS(random_merge_tree(3, 1, 5, 5), std::invalid_argument);

  const auto c = caterpillar(20, 1);
  CHECK(validate(c).ok());
  CHECK(c.leaves().size() == 20);
  CHECK_THROWS_AS(caterpillar(5, 5), std::invalid_argument);
}

TEST_SUITE_END();
