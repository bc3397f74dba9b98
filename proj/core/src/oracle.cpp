#include "mtavg/oracle.hpp"

#include <memory>

#include "mtavg/interleave.hpp"

namespace mtavg::oracle {

namespace {

void require_budget(const MergeTree& t1, const MergeTree& t2, const EnumerationBudget& budget) {
  if (budget.max_leaves == 0 || budget.max_maps == 0) throw std::invalid_argument("enumeration budget must be positive");
  if (t1.leaves().size() > budget.max_leaves || t2.leaves().size() > budget.max_leaves) {
    throw BudgetExceeded("leaf count exceeds the enumeration budget");
  }
}

}  // namespace

std::size_t enumerate_maps(const AugmentedPair& pair, const EnumerationBudget& budget,
                           const std::function<bool(const std::vector<VertexIndex>&)>& visit) {
  const auto& a = pair.t1_hat;
  const auto& b = pair.t2_hat;
  const auto leaves = a.tree.leaves();

  std::vector<VertexIndex> assign(a.tree.size(), kNoVertex);
  std::size_t visited = 0;
  bool stop = false;

  // Assigns v -> x and the ancestors of both; false on a clash with an
  // earlier choice. Newly assigned vertices go to `touched` for undo.
  auto place = [&](VertexIndex v, VertexIndex x, std::vector<VertexIndex>& touched) {
    while (v != kNoVertex) {
      if (x == kNoVertex) return false;
      if (assign[v] == x) return true;
      if (assign[v] != kNoVertex) return false;
      assign[v] = x;
      touched.push_back(v);
      v = a.tree.parent(v);
      x = b.tree.parent(x);
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == leaves.size()) {
      if (++visited > budget.max_maps) throw BudgetExceeded("map enumeration exceeds the budget");
      if (!visit(assign)) stop = true;
      return;
    }
    const VertexIndex leaf = leaves[i];
    for (VertexIndex x : b.by_level[a.level[leaf]]) {
      std::vector<VertexIndex> touched;
      if (place(leaf, x, touched)) self(self, i + 1);
      for (VertexIndex v : touched) assign[v] = kNoVertex;
      if (stop) return;
    }
  };
  recurse(recurse, 0);
  return visited;
}

bool brute_decide(const MergeTree& t1, const MergeTree& t2, const Height& eps, const EnumerationBudget& budget) {
  require_budget(t1, t2, budget);
  auto pair = std::make_shared<const AugmentedPair>(build_augmented(t1, t2, eps));
  GoodMapChecker checker(pair);
  bool found = false;
  enumerate_maps(*pair, budget, [&](const std::vector<VertexIndex>& assign) {
    found = checker.passes(assign, S2Mode::Prime);
    return !found;
  });
  return found;
}

Height brute_distance(const MergeTree& t1, const MergeTree& t2, const EnumerationBudget& budget) {
  require_budget(t1, t2, budget);
  for (const auto& eps : candidate_epsilons(t1, t2)) {
    if (brute_decide(t1, t2, eps, budget)) return eps;
  }
  throw std::logic_error("no candidate epsilon admits a good map");
}

}  // namespace mtavg::oracle
