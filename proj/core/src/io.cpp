#include "mtavg/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace mtavg::io {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

void expect_format(const Json& j, std::string_view format) {
  if (!j.is_object()) throw ParseError("top level must be an object");
  if (!j.contains("format") || !j["format"].is_string() || j["format"].get<std::string>() != format) {
    throw ParseError("format: expected \"" + std::string(format) + "\"");
  }
}

Height parse_height(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return Height::parse(j.get<std::string>());
    if (j.is_number_integer()) return Height(j.get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  if (j.is_number()) throw ParseError(where + ": write non-integer numbers as strings, e.g. \"3/2\" or \"1.5\"");
  throw ParseError(where + ": expected a number or a string");
}

std::string get_string(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_string()) throw ParseError(where + "." + key + ": expected a string");
  return obj[key].get<std::string>();
}

Json tree_json(const MergeTree& tree) {
  Json nodes = Json::array();
  for (const auto& n : tree.nodes()) {
    Json node{{"id", n.id}, {"height", n.height.str()}};
    if (n.parent) node["parent"] = *n.parent;
    nodes.push_back(std::move(node));
  }
  return Json{{"format", kTreeFormat}, {"nodes", std::move(nodes)}};
}

Json witness_json(const GoodMapWitness& w) {
  const auto& a = w.source();
  const auto& b = w.target();
  Json entries = Json::array();
  for (VertexIndex v = 0; v < w.assign.size(); ++v) {
    entries.push_back({{"source_tree", "T1"},
                       {"source", a.id(v)},
                       {"source_height", a.height(v).str()},
                       {"target", b.id(w.assign[v])},
                       {"target_height", b.height(w.assign[v]).str()}});
  }
  return Json{{"format", kMapFormat},
              {"kind", "witness"},
              {"epsilon", w.epsilon().str()},
              {"entries", std::move(entries)},
              {"t1_hat", tree_json(a)},
              {"t2_hat", tree_json(b)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

MergeTree parse_tree(std::string_view text) {
  const Json j = parse_json(text);
  expect_format(j, kTreeFormat);
  if (!j.contains("nodes") || !j["nodes"].is_array()) throw ParseError("nodes: expected an array");
  std::vector<NodeSpec> nodes;
  for (std::size_t i = 0; i < j["nodes"].size(); ++i) {
    const Json& n = j["nodes"][i];
    const std::string where = "nodes[" + std::to_string(i) + "]";
    if (!n.is_object()) throw ParseError(where + ": expected an object");
    NodeSpec spec{get_string(n, "id", where), Height(0), std::nullopt};
    if (!n.contains("height")) throw ParseError(where + ".height: missing");
    spec.height = parse_height(n["height"], where + ".height");
    if (n.contains("parent") && !n["parent"].is_null()) spec.parent = get_string(n, "parent", where);
    nodes.push_back(std::move(spec));
  }
  return MergeTree(std::move(nodes));
}

std::string format_tree(const MergeTree& tree) { return dump(tree_json(tree)); }

std::string format_witness(const GoodMapWitness& witness) { return dump(witness_json(witness)); }

std::string format_gamma(const AverageResult& result) {
  const auto& t3 = result.t3;
  Json entries = Json::array();
  for (const auto& e : result.gamma) {
    Json entry{{"source_tree", to_string(e.source_tree)},
               {"source", e.source},
               {"source_height", e.source_height.str()},
               {"target", t3.id(e.target.edge)},
               {"target_height", e.target.height.str()}};
    if (e.attachment) entry["attachment"] = true;
    entries.push_back(std::move(entry));
  }
  Json provenance = Json::object();
  for (VertexIndex v = 0; v < t3.size(); ++v) provenance[t3.id(v)] = to_string(result.provenance[v]);
  return dump(Json{{"format", kMapFormat},
                   {"kind", "gamma"},
                   {"epsilon", result.epsilon.str()},
                   {"entries", std::move(entries)},
                   {"provenance", std::move(provenance)}});
}

std::string format_certificate(const MidpointReport& report, const Height& epsilon) {
  Json failing = Json::array();
  for (const auto& side : report.failing_sides()) failing.push_back(side);
  return dump(Json{{"format", kCertificateFormat},
                   {"epsilon", epsilon.str()},
                   {"half_epsilon", report.half_epsilon.str()},
                   {"certified", report.ok()},
                   {"failing_sides", std::move(failing)},
                   {"t1_side", report.t1_side ? witness_json(*report.t1_side) : Json(nullptr)},
                   {"t2_side", report.t2_side ? witness_json(*report.t2_side) : Json(nullptr)}});
}

field::ScalarGraph parse_scalar_graph(std::string_view text) {
  const Json j = parse_json(text);
  expect_format(j, kGraphFormat);
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("vertices: expected an array");
  field::ScalarGraph g;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
    const Json& v = j["vertices"][i];
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!v.is_object()) throw ParseError(where + ": expected an object");
    field::GraphVertex gv{get_string(v, "id", where), Height(0)};
    if (!v.contains("value")) throw ParseError(where + ".value: missing");
    gv.value = parse_height(v["value"], where + ".value");
    if (!index.emplace(gv.id, g.vertices.size()).second) throw ParseError(where + ".id: duplicate '" + gv.id + "'");
    g.vertices.push_back(std::move(gv));
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("edges: expected an array");
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
      const Json& e = j["edges"][i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw ParseError(where + ": expected a pair of vertex ids");
      }
      auto u = index.find(e[0].get<std::string>());
      auto v = index.find(e[1].get<std::string>());
      if (u == index.end() || v == index.end()) throw ParseError(where + ": unknown vertex id");
      g.edges.emplace_back(u->second, v->second);
    }
  }
  return g;
}

std::string format_scalar_graph(const field::ScalarGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) vertices.push_back({{"id", v.id}, {"value", v.value.str()}});
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back({g.vertices[u].id, g.vertices[v].id});
  return dump(Json{{"format", kGraphFormat}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}});
}

std::string render_dot(const MergeTree& tree) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph merge_tree {\n  rankdir=BT;\n  node [shape=box];\n";
  for (VertexIndex v = 0; v < tree.size(); ++v) {
    os << "  " << quote(tree.id(v)) << " [label=" << quote(tree.id(v) + "@" + tree.height(v).str()) << "];\n";
  }
  for (VertexIndex v = 0; v < tree.size(); ++v) {
    if (tree.parent(v) != kNoVertex) os << "  " << quote(tree.id(v)) << " -> " << quote(tree.id(tree.parent(v))) << ";\n";
  }
  std::map<Height, std::vector<VertexIndex>> by_height;
  for (VertexIndex v = 0; v < tree.size(); ++v) by_height[tree.height(v)].push_back(v);
  for (const auto& [h, vs] : by_height) {
    os << "  { rank=same; /* height " << h.str() << " */";
    for (VertexIndex v : vs) os << " " << quote(tree.id(v)) << ";";
    os << " }\n";
  }
  os << "}\n";
  return os.str();
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot write");
  out << text;
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

MergeTree load_tree(const std::filesystem::path& path) {
  MergeTree tree;
  try {
    tree = parse_tree(read_text(path));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    throw ParseError(msg.starts_with(path.string()) ? msg : path.string() + ": " + msg);
  }
  require_valid(tree, path.string());
  return tree;
}

}  // namespace mtavg::io
