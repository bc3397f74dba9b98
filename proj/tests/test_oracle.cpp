#include "doctest.h"
#include "mtavg/interleave.hpp"
#include "mtavg/oracle.hpp"
#include "support.hpp"

using namespace mtavg;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("exhaustive search on the golden fixtures") {
  CHECK(oracle::brute_distance(test::fix_a(), test::fix_b()) == Height(3, 2));
  CHECK(oracle::brute_distance(test::fix_p0(), test::fix_p4()) == Height(4));
  CHECK_FALSE(oracle::brute_decide(test::fix_a(), test::fix_b(), Height(1)));
  CHECK(oracle::brute_decide(test::fix_a(), test::fix_b(), Height(3, 2)));
}

TEST_CASE("every enumerated map is well formed") {
  auto pair = std::make_shared<const AugmentedPair>(build_augmented(test::fix_a(), test::fix_a(), Height(1)));
  GoodMapChecker checker(pair);
  const std::size_t n = oracle::enumerate_maps(*pair, {}, [&](const std::vector<VertexIndex>& assign) {
    CHECK_NOTHROW(checker.check(assign, S2Mode::Prime));
    return true;
  });
  CHECK(n >= 2);

  std::size_t seen = 0;
  oracle::enumerate_maps(*pair, {}, [&](const std::vector<VertexIndex>&) { return ++seen < 1; });
  CHECK(seen == 1);
}

TEST_CASE("budget is enforced") {
  const auto big = random_merge_tree(7, 3, 0, 20);
  CHECK_THROWS_AS(oracle::brute_decide(big, test::fix_b(), Height(1)), oracle::BudgetExceeded);
  const auto fork = test::tree_of({{"c1", "0", "r"}, {"c2", "0", "r"}, {"r", "3"}});
  CHECK_THROWS_AS(oracle::brute_decide(fork, fork, Height(0), {5, 1}), oracle::BudgetExceeded);
}

TEST_CASE("oracle agrees with the dynamic program on small trees") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    CAPTURE(seed);
    const MergeTree t1 = test::corpus_tree(seed, 4, 0, 10);
    const MergeTree t2 = test::corpus_tree(seed + 77, 4, 0, 10);
    for (const auto& eps : candidate_epsilons(t1, t2)) {
      CAPTURE(eps.str());
      CHECK(decide(t1, t2, eps).yes == oracle::brute_decide(t1, t2, eps));
    }
  }
}

TEST_SUITE_END();
