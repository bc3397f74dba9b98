#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mtavg/augment.hpp"

namespace mtavg {

/// Vertex form of an epsilon-good map T1-hat -> T2-hat.
///
/// `assign[v]` is the image of T1-hat vertex v. A well-formed witness is
/// level preserving and parent compatible, which is the discrete form of a
/// continuous map that raises heights by exactly epsilon.
struct GoodMapWitness {
  std::shared_ptr<const AugmentedPair> pair;
  std::vector<VertexIndex> assign;

  const Height& epsilon() const { return pair->epsilon; }
  const MergeTree& source() const { return pair->t1_hat.tree; }
  const MergeTree& target() const { return pair->t2_hat.tree; }
};

enum class Condition { S1, S2, S2Prime, S3 };
enum class S2Mode { Full, Prime };

std::string to_string(Condition c);

struct Violation {
  Condition condition;
  std::vector<std::string> culprits;
  std::string explanation;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(Condition c) const;
};

/// Reusable checker for many witnesses over one augmented pair; precomputes
/// the 2*epsilon ancestors of T1-hat and the subtree minima of T2-hat.
class GoodMapChecker {
 public:
  explicit GoodMapChecker(std::shared_ptr<const AugmentedPair> pair);

  /// Throws std::invalid_argument("malformed witness: ...") when `assign`
  /// is not total, not level preserving, or not parent compatible.
  ValidationReport check(const std::vector<VertexIndex>& assign, S2Mode mode) const;

  /// Stops at the first violated condition; used by enumeration.
  bool passes(const std::vector<VertexIndex>& assign, S2Mode mode) const;

  const AugmentedPair& pair() const { return *pair_; }

 private:
  void require_well_formed(const std::vector<VertexIndex>& assign) const;
  void check_s1(const std::vector<VertexIndex>& assign, ValidationReport& out, bool stop) const;
  void check_s2_prime(const std::vector<VertexIndex>& assign, ValidationReport& out, bool stop) const;
  void check_s2_full(const std::vector<VertexIndex>& assign, ValidationReport& out, bool stop) const;
  void check_s3(const std::vector<VertexIndex>& assign, ValidationReport& out, bool stop) const;

  std::shared_ptr<const AugmentedPair> pair_;
  Height two_eps_;
  std::vector<TreePoint> lift_;  // per T1-hat vertex: ancestor at height + 2*eps
};

ValidationReport validate_good_map(const GoodMapWitness& witness, S2Mode mode);

/// Image of the witness, as a membership mask over T2-hat vertices.
std::vector<bool> image_mask(const GoodMapWitness& witness);

}  // namespace mtavg
