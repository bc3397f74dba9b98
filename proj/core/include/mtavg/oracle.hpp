#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mtavg/goodmap.hpp"

namespace mtavg::oracle {

struct EnumerationBudget {
  std::size_t max_leaves = 5;
  std::size_t max_maps = 2'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Calls `visit` once for every level-preserving, parent-compatible vertex
/// map T1-hat -> T2-hat. Such a map is fixed by the images of the T1-hat
/// leaves, so the enumeration picks one same-level target per leaf and
/// propagates upwards. `visit` returns false to stop early.
/// Returns the number of maps visited.
std::size_t enumerate_maps(const AugmentedPair& pair, const EnumerationBudget& budget,
                           const std::function<bool(const std::vector<VertexIndex>&)>& visit);

/// Exhaustive decision: does any enumerated map pass validate_good_map in
/// S2' mode? Throws BudgetExceeded rather than guessing.
bool brute_decide(const MergeTree& t1, const MergeTree& t2, const Height& eps,
                  const EnumerationBudget& budget = {});

/// Least candidate epsilon accepted by brute_decide, by ascending scan.
Height brute_distance(const MergeTree& t1, const MergeTree& t2, const EnumerationBudget& budget = {});

}  // namespace mtavg::oracle
