#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mtavg/goodmap.hpp"

namespace mtavg {

/// DP state: a same-level set of T1-hat vertices sharing one 2*epsilon
/// ancestor, paired with one T2-hat vertex on that level.
struct ValidPair {
  std::vector<VertexIndex> set;  // sorted by index
  VertexIndex target = kNoVertex;

  friend auto operator<=>(const ValidPair&, const ValidPair&) = default;
};

/// Bottom-up valid-pair dynamic program deciding whether an epsilon-good map
/// T1-hat -> T2-hat exists.
///
/// F(S, w) holds when the children of S can be split into groups, one per
/// child w_j of w, with F(S_j, w_j) for every non-empty group; an empty group
/// is allowed only if the subtree under w_j reaches at most 2*epsilon below w.
/// Table entries are created on demand from the top pair downwards.
class GoodMapSolver {
 public:
  explicit GoodMapSolver(std::shared_ptr<const AugmentedPair> pair);

  bool solve();

  /// Witness extracted from the stored partitions; requires solve() == true.
  GoodMapWitness witness() const;

  std::size_t table_size() const { return table_.size(); }
  std::size_t true_entries() const;

 private:
  struct Entry {
    bool feasible = false;
    std::vector<VertexIndex> child_set;    // Ch(S), ordered by id
    std::vector<std::uint64_t> partition;  // one mask over child_set per child of target
  };

  const Entry& evaluate(const ValidPair& key);
  bool partition_children(const std::vector<VertexIndex>& ch, std::span<const VertexIndex> targets,
                          std::vector<std::uint64_t>& chosen);
  void extract(const ValidPair& key, std::vector<VertexIndex>& assign) const;

  std::shared_ptr<const AugmentedPair> pair_;
  Height two_eps_;
  std::vector<VertexIndex> lift_anchor_;  // per T1-hat vertex
  std::vector<bool> may_stay_uncovered_;  // per T2-hat vertex: subtree within 2*eps of its parent
  std::map<ValidPair, Entry> table_;
  std::optional<bool> result_;
};

struct Decision {
  bool yes = false;
  std::optional<GoodMapWitness> witness;
};

/// Is there an epsilon-good map T1 -> T2 (equivalently, is d_ID <= eps)?
Decision decide(const MergeTree& t1, const MergeTree& t2, const Height& eps);

/// Every value the interleaving distance can take for these two trees:
/// 0, |g(w) - f(v)|, |f(v) - f(v')| / 2 and |g(w) - g(w')| / 2; sorted.
std::vector<Height> candidate_epsilons(const MergeTree& t1, const MergeTree& t2);

struct DistanceResult {
  Height epsilon;
  GoodMapWitness witness;
};

/// Exact interleaving distance: the least candidate accepted by decide().
DistanceResult distance(const MergeTree& t1, const MergeTree& t2);

/// Largest sum of vertex degrees inside an eps-ball around any vertex of
/// either tree (the root ray counts as one incident edge).
std::size_t epsilon_degree(const MergeTree& t1, const MergeTree& t2, const Height& eps);

}  // namespace mtavg
