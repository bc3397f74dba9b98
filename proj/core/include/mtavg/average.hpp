#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "mtavg/goodmap.hpp"

namespace mtavg {

enum class Provenance { ShiftedT1, GraftedT2, MergedNca };
enum class SourceTree { T1, T2 };

std::string to_string(Provenance p);
std::string to_string(SourceTree s);

/// One point of an input tree and where the average map sends it.
///
/// `source` is the id of the hosting vertex in the augmented input tree
/// (the lower end of the edge when `source_height` lies above it).
/// `attachment` marks the entry sending an uncovered subtree's nearest
/// image ancestor onto the T1 vertex its trimmed subtree hangs from.
struct GammaEntry {
  SourceTree source_tree = SourceTree::T1;
  std::string source;
  Height source_height;
  TreePoint target;
  bool attachment = false;
};

struct AverageResult {
  MergeTree t3;
  Height epsilon;
  std::vector<GammaEntry> gamma;
  std::vector<Provenance> provenance;               // per t3 vertex
  std::vector<std::optional<TreePoint>> graft_anchor;  // per t3 vertex: attachment point of its graft
  GoodMapWitness witness;                           // T1-hat -> T2-hat at epsilon
};

/// Mutable tree used while building the average.
struct AverageDraft {
  struct Vertex {
    std::string id;
    Height height;
    VertexIndex parent = kNoVertex;
    std::vector<VertexIndex> children;
    Provenance provenance = Provenance::ShiftedT1;
    bool alive = true;
    VertexIndex forward = kNoVertex;  // replacement once removed
    std::optional<VertexIndex> graft_anchor;
  };
  struct GraftPoint {
    std::string source;  // T2-hat vertex id hosting the point
    Height source_height;
    VertexIndex vertex;  // draft vertex
  };
  struct Attachment {
    std::string source;       // T2-hat id of the nearest image ancestor
    Height source_height;
    VertexIndex t1_vertex;    // T1-hat index of the vertex the graft hangs from
  };

  Height epsilon;
  std::vector<Vertex> vertices;
  std::vector<VertexIndex> t1_vertex;  // per T1-hat vertex: draft vertex it started as
  std::vector<GraftPoint> grafted;
  std::vector<Attachment> attachments;
  std::unordered_set<std::string> used_ids;

  /// Follows replacements to the live vertex now standing for `v`.
  VertexIndex resolve(VertexIndex v) const;
};

/// Copy of T1-hat with every height raised by eps/2.
AverageDraft shift_step(const AugmentedTree& t1_hat, const Height& eps);

/// Hangs the trimmed copy of every uncovered T2-hat subtree from the first
/// preimage (by id) of its nearest image ancestor. Points more than eps below
/// that ancestor are dropped; kept heights are g - eps/2.
/// Throws std::invalid_argument("malformed witness: ...") if the image is not
/// closed upwards.
void graft_step(AverageDraft& draft, const GoodMapWitness& witness);

/// For every set of T1-hat vertices sharing an image, from the lowest level
/// up: if their common ancestor sits higher than eps above them, the paths
/// are glued together from height k + eps upwards.
void lower_nca_step(AverageDraft& draft, const GoodMapWitness& witness);

/// Compacts the draft into a tree and assembles the average map.
AverageResult finish_average(const AverageDraft& draft, const GoodMapWitness& witness);

/// The three steps above for an already computed witness, uncertified.
AverageResult build_average(const GoodMapWitness& witness);

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Average of two merge trees at their interleaving distance, or at `eps`
/// when given (which must be at least the distance). The result is checked
/// against both inputs at eps/2 before it is returned; a failed check throws
/// CertificationError.
AverageResult average_tree(const MergeTree& t1, const MergeTree& t2, std::optional<Height> eps = std::nullopt);

/// Same result with one-child interior vertices removed and the average map
/// re-expressed on the smaller tree.
AverageResult simplified(const AverageResult& result);

}  // namespace mtavg
