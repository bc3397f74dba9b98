#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtavg/average.hpp"

namespace mtavg {

/// Outcome of re-deciding both half-distances of an average.
struct MidpointReport {
  Height half_epsilon;
  std::optional<GoodMapWitness> t1_side;  // T1-hat -> T3-hat at half_epsilon
  std::optional<GoodMapWitness> t2_side;  // T2-hat -> T3-hat at half_epsilon

  bool ok() const { return t1_side && t2_side; }
  /// "T1", "T2", both, or empty.
  std::vector<std::string> failing_sides() const;
  std::string describe() const;
};

MidpointReport check_midpoint(const MergeTree& t1, const MergeTree& t2, const MergeTree& t3, const Height& eps);
MidpointReport check_midpoint(const MergeTree& t1, const MergeTree& t2, const AverageResult& result);

enum class GammaProperty { Domain, HeightShift, Monotone, Surjective, Provenance, StepBound, GraftDepth };

std::string to_string(GammaProperty p);

struct GammaIssue {
  GammaProperty property;
  std::string detail;
};

struct GammaReport {
  std::vector<GammaIssue> issues;
  bool ok() const { return issues.empty(); }
  bool has(GammaProperty p) const;
};

/// Checks the average map of `result`:
///  - every T1-hat vertex has an entry (Domain);
///  - T1 points rise by eps/2, T2 points drop by eps/2 (HeightShift);
///  - ancestor pairs map to ancestor pairs: all of T1, and on T2 the grafted
///    points together with the attachment they hang from (Monotone);
///  - every vertex of the average is hit (Surjective);
///  - a vertex hit more than once is hit only from T1, apart from the
///    attachment entries (Provenance);
///  - vertices sharing a witness image have their common ancestor at most
///    eps above them (StepBound);
///  - grafted leaves hang at most eps below their attachment (GraftDepth).
GammaReport check_gamma(const AverageResult& result);

}  // namespace mtavg
