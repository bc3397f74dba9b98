#include "mtavg/interleave.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace mtavg {

GoodMapSolver::GoodMapSolver(std::shared_ptr<const AugmentedPair> pair)
    : pair_(std::move(pair)), two_eps_(pair_->epsilon + pair_->epsilon) {
  const auto& a = pair_->t1_hat.tree;
  const auto& b = pair_->t2_hat.tree;

  lift_anchor_.resize(a.size());
  for (VertexIndex v = 0; v < a.size(); ++v) {
    lift_anchor_[v] = ancestor_at(a, a.point(v), a.height(v) + two_eps_).edge;
  }

  std::vector<Height> lowest(b.size());
  for (VertexIndex w : b.bottom_up_order()) {
    lowest[w] = b.height(w);
    for (VertexIndex c : b.children(w)) lowest[w] = std::min(lowest[w], lowest[c]);
  }
  may_stay_uncovered_.assign(b.size(), false);
  for (VertexIndex w = 0; w < b.size(); ++w) {
    const VertexIndex p = b.parent(w);
    may_stay_uncovered_[w] = p != kNoVertex && b.height(p) - lowest[w] <= two_eps_;
  }
}

bool GoodMapSolver::solve() {
  if (!result_) {
    const auto& a = pair_->t1_hat.tree;
    const auto& b = pair_->t2_hat.tree;
    if (pair_->t1_hat.level[a.root()] != pair_->t2_hat.level[b.root()]) {
      throw std::logic_error("augmented roots are not on the same level");
    }
    result_ = evaluate({{a.root()}, b.root()}).feasible;
  }
  return *result_;
}

const GoodMapSolver::Entry& GoodMapSolver::evaluate(const ValidPair& key) {
  if (auto it = table_.find(key); it != table_.end()) return it->second;

  const auto& a = pair_->t1_hat.tree;
  const auto& b = pair_->t2_hat.tree;
  Entry entry;
  for (VertexIndex s : key.set) {
    for (VertexIndex c : a.children(s)) entry.child_set.push_back(c);
  }
  std::sort(entry.child_set.begin(), entry.child_set.end(),
            [&](VertexIndex x, VertexIndex y) { return a.id(x) < a.id(y); });

  const auto targets = b.children(key.target);
  if (targets.empty()) {
    entry.feasible = entry.child_set.empty();
  } else {
    if (entry.child_set.size() > 63) throw std::runtime_error("epsilon-degree too large for the exact DP");
    entry.feasible = partition_children(entry.child_set, targets, entry.partition);
  }
  return table_.emplace(key, std::move(entry)).first->second;
}

bool GoodMapSolver::partition_children(const std::vector<VertexIndex>& ch, std::span<const VertexIndex> targets,
                                       std::vector<std::uint64_t>& chosen) {
  // Children can only share a group when they share a 2*eps ancestor.
  std::vector<std::uint64_t> classes;
  {
    std::map<VertexIndex, std::uint64_t> by_anchor;
    for (std::size_t i = 0; i < ch.size(); ++i) by_anchor[lift_anchor_[ch[i]]] |= std::uint64_t{1} << i;
    for (const auto& [anchor, mask] : by_anchor) classes.push_back(mask);
  }
  const std::uint64_t all = ch.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ch.size()) - 1;

  std::set<std::pair<std::size_t, std::uint64_t>> dead;
  chosen.assign(targets.size(), 0);

  auto subset = [&](std::uint64_t mask) {
    std::vector<VertexIndex> s;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (mask >> i & 1) s.push_back(ch[i]);
    }
    std::sort(s.begin(), s.end());
    return s;
  };

  auto search = [&](auto&& self, std::size_t j, std::uint64_t remaining) -> bool {
    if (j == targets.size()) return remaining == 0;
    if (dead.contains({j, remaining})) return false;
    if (may_stay_uncovered_[targets[j]] && self(self, j + 1, remaining)) {
      chosen[j] = 0;
      return true;
    }
    for (std::uint64_t cls : classes) {
      const std::uint64_t avail = remaining & cls;
      if (!avail) continue;
      // Non-empty submasks of avail in increasing order.
      for (std::uint64_t sub = avail & (~avail + 1);; sub = (sub - avail) & avail) {
        if (sub == 0) break;
        if (evaluate({subset(sub), targets[j]}).feasible && self(self, j + 1, remaining & ~sub)) {
          chosen[j] = sub;
          return true;
        }
      }
    }
    dead.insert({j, remaining});
    return false;
  };
  return search(search, 0, all);
}

GoodMapWitness GoodMapSolver::witness() const {
  if (!result_ || !*result_) throw std::logic_error("no epsilon-good map to extract");
  const auto& a = pair_->t1_hat.tree;
  const auto& b = pair_->t2_hat.tree;
  std::vector<VertexIndex> assign(a.size(), kNoVertex);
  extract({{a.root()}, b.root()}, assign);
  return {pair_, std::move(assign)};
}

void GoodMapSolver::extract(const ValidPair& key, std::vector<VertexIndex>& assign) const {
  const auto& entry = table_.at(key);
  for (VertexIndex s : key.set) assign[s] = key.target;
  const auto targets = pair_->t2_hat.tree.children(key.target);
  for (std::size_t j = 0; j < entry.partition.size(); ++j) {
    const std::uint64_t mask = entry.partition[j];
    if (!mask) continue;
    std::vector<VertexIndex> s;
    for (std::size_t i = 0; i < entry.child_set.size(); ++i) {
      if (mask >> i & 1) s.push_back(entry.child_set[i]);
    }
    std::sort(s.begin(), s.end());
    extract({std::move(s), targets[j]}, assign);
  }
}

std::size_t GoodMapSolver::true_entries() const {
  return static_cast<std::size_t>(
      std::count_if(table_.begin(), table_.end(), [](const auto& kv) { return kv.second.feasible; }));
}

Decision decide(const MergeTree& t1, const MergeTree& t2, const Height& eps) {
  auto pair = std::make_shared<const AugmentedPair>(build_augmented(t1, t2, eps));
  GoodMapSolver solver(pair);
  Decision out;
  out.yes = solver.solve();
  if (out.yes) out.witness = solver.witness();
  return out;
}

std::vector<Height> candidate_epsilons(const MergeTree& t1, const MergeTree& t2) {
  std::vector<Height> c{Height(0)};
  for (VertexIndex v = 0; v < t1.size(); ++v) {
    for (VertexIndex w = 0; w < t2.size(); ++w) c.push_back((t2.height(w) - t1.height(v)).abs());
  }
  for (VertexIndex v = 0; v < t1.size(); ++v) {
    for (VertexIndex u = v + 1; u < t1.size(); ++u) c.push_back((t1.height(v) - t1.height(u)).abs().half());
  }
  for (VertexIndex w = 0; w < t2.size(); ++w) {
    for (VertexIndex x = w + 1; x < t2.size(); ++x) c.push_back((t2.height(w) - t2.height(x)).abs().half());
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

DistanceResult distance(const MergeTree& t1, const MergeTree& t2) {
  require_valid(t1, "T1");
  require_valid(t2, "T2");
  const auto c = candidate_epsilons(t1, t2);

  Decision best = decide(t1, t2, c.back());
  if (!best.yes) throw std::logic_error("largest candidate epsilon is infeasible");
  std::size_t lo = 0;
  std::size_t hi = c.size() - 1;  // invariant: c[hi] feasible, everything below lo infeasible
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    Decision d = decide(t1, t2, c[mid]);
    if (d.yes) {
      hi = mid;
      best = std::move(d);
    } else {
      lo = mid + 1;
    }
  }
  return {c[hi], std::move(*best.witness)};
}

std::size_t epsilon_degree(const MergeTree& t1, const MergeTree& t2, const Height& eps) {
  if (eps < Height(0)) throw std::invalid_argument("epsilon must be non-negative");
  std::size_t best = 0;
  for (const MergeTree* t : {&t1, &t2}) {
    for (VertexIndex u = 0; u < t->size(); ++u) {
      std::size_t sum = 0;
      for (VertexIndex v = 0; v < t->size(); ++v) {
        if (tree_distance(*t, t->point(u), t->point(v)) <= eps) sum += t->degree(v);
      }
      best = std::max(best, sum);
    }
  }
  return best;
}

}  // namespace mtavg
