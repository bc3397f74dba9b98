#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mtavg/average.hpp"
#include "mtavg/field.hpp"
#include "mtavg/verify.hpp"

namespace mtavg::io {

/// Malformed input; the message says where.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kTreeFormat = "merge-tree/v1";
inline constexpr std::string_view kMapFormat = "tree-map/v1";
inline constexpr std::string_view kCertificateFormat = "midpoint-certificate/v1";
inline constexpr std::string_view kGraphFormat = "scalar-graph/v1";

/// {"format": "merge-tree/v1", "nodes": [{"id", "height", "parent"?}, ...]}.
/// Heights are strings ("3/2", "-4", "0.25") or JSON integers. The tree is
/// parsed as written; validity is checked separately.
MergeTree parse_tree(std::string_view text);
std::string format_tree(const MergeTree& tree);

/// Witness map T1-hat -> T2-hat, with both augmented trees embedded.
std::string format_witness(const GoodMapWitness& witness);

/// Average map of an average result, with per-vertex provenance.
std::string format_gamma(const AverageResult& result);

std::string format_certificate(const MidpointReport& report, const Height& epsilon);

/// {"format": "scalar-graph/v1", "vertices": [{"id", "value"}], "edges": [[id, id], ...]}.
field::ScalarGraph parse_scalar_graph(std::string_view text);
std::string format_scalar_graph(const field::ScalarGraph& g);

/// Graphviz digraph: child -> parent edges, labels `id@height`, vertices of
/// equal height share a rank. Output depends only on the tree.
std::string render_dot(const MergeTree& tree);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// read_text + parse_tree + require_valid; errors name the file.
MergeTree load_tree(const std::filesystem::path& path);

}  // namespace mtavg::io
