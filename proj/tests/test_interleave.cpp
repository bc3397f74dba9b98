#include "doctest.h"
#include "mtavg/interleave.hpp"
#include "support.hpp"

using namespace mtavg;

TEST_SUITE_BEGIN("interleave");

TEST_CASE("golden distances") {
  CHECK(distance(test::fix_a(), test::fix_b()).epsilon == Height(3, 2));
  CHECK(distance(test::fix_b(), test::fix_a()).epsilon == Height(3, 2));
  CHECK(distance(test::fix_p0(), test::fix_p4()).epsilon == Height(4));
  CHECK(distance(test::fix_a(), test::fix_a()).epsilon == Height(0));
  CHECK_FALSE(decide(test::fix_a(), test::fix_b(), Height(1)).yes);
  CHECK(decide(test::fix_a(), test::fix_b(), Height(2)).yes);
  CHECK_FALSE(decide(test::fix_a(), test::fix_b(), Height(1)).witness.has_value());
}

TEST_CASE("candidate set") {
  const auto c = candidate_epsilons(test::fix_a(), test::fix_b());
  CHECK(c == std::vector<Height>{Height(0), Height(1), Height(3, 2), Height(5, 2), Height(4)});
  CHECK(candidate_epsilons(test::fix_p0(), test::fix_p4()) == std::vector<Height>{Height(0), Height(4)});
}

TEST_CASE("epsilon degree") {
  CHECK(epsilon_degree(test::fix_p0(), test::fix_p0(), Height(0)) == 1);
  CHECK(epsilon_degree(test::fix_a(), test::fix_b(), Height(0)) == 3);
  CHECK(epsilon_degree(test::fix_a(), test::fix_b(), Height(10)) == 5);
}

TEST_CASE("solver fills a table on demand") {
  auto pair = std::make_shared<const AugmentedPair>(build_augmented(test::fix_a(), test::fix_b(), Height(3, 2)));
  GoodMapSolver solver(pair);
  CHECK(solver.solve());
  CHECK(solver.table_size() > 0);
  CHECK(solver.true_entries() <= solver.table_size());
  CHECK(validate_good_map(solver.witness(), S2Mode::Prime).ok());

  GoodMapSolver no(std::make_shared<const AugmentedPair>(build_augmented(test::fix_a(), test::fix_b(), Height(1))));
  CHECK_FALSE(no.solve());
  CHECK_THROWS(no.witness());
}

TEST_CASE("random pairs: symmetry, monotonicity, sound witnesses") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    CAPTURE(seed);
    const MergeTree t1 = test::corpus_tree(seed, 5);
    const MergeTree t2 = test::corpus_tree(seed + 500, 5);
    const auto d = distance(t1, t2);
    CHECK(distance(t2, t1).epsilon == d.epsilon);
    CHECK(validate_good_map(d.witness, S2Mode::Prime).ok());
    CHECK(validate_good_map(d.witness, S2Mode::Full).ok());
    CHECK(distance(t1, t1).epsilon == Height(0));

    bool seen_yes = false;
    for (const auto& eps : candidate_epsilons(t1, t2)) {
      const auto r = decide(t1, t2, eps);
      CHECK(r.yes == (eps >= d.epsilon));
      if (seen_yes) CHECK(r.yes);
      seen_yes = seen_yes || r.yes;
      if (r.yes) CHECK(validate_good_map(*r.witness, S2Mode::Prime).ok());
    }
    // Past the distance, any epsilon works, including ones off the candidate set.
    CHECK(decide(t1, t2, d.epsilon + Height(1, 3)).yes);
  }
}

TEST_SUITE_END();
