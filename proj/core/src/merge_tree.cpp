#include "mtavg/merge_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtavg {

MergeTree::MergeTree(std::vector<NodeSpec> nodes) {
  vertices_.reserve(nodes.size());
  for (auto& n : nodes) {
    if (!by_id_.emplace(n.id, vertices_.size()).second) duplicate_ids_.push_back(n.id);
    vertices_.push_back({std::move(n.id), std::move(n.height), kNoVertex, {}});
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& parent = nodes[i].parent;
    if (!parent) {
      ++parentless_;
      root_ = i;
      continue;
    }
    auto it = by_id_.find(*parent);
    if (it == by_id_.end()) {
      unknown_parents_.push_back(vertices_[i].id);
      continue;
    }
    vertices_[i].parent = it->second;
    vertices_[it->second].children.push_back(i);
  }
  if (parentless_ != 1) root_ = kNoVertex;
  for (auto& v : vertices_) {
    std::sort(v.children.begin(), v.children.end(),
              [this](VertexIndex a, VertexIndex b) { return vertices_[a].id < vertices_[b].id; });
  }
}

std::optional<VertexIndex> MergeTree::find(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

VertexIndex MergeTree::index_of(const std::string& id) const {
  auto v = find(id);
  if (!v) throw std::out_of_range("no vertex with id '" + id + "'");
  return *v;
}

std::vector<NodeSpec> MergeTree::nodes() const {
  std::vector<NodeSpec> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) {
    NodeSpec n{v.id, v.height, std::nullopt};
    if (v.parent != kNoVertex) n.parent = vertices_[v.parent].id;
    out.push_back(std::move(n));
  }
  return out;
}

std::vector<VertexIndex> MergeTree::leaves() const {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].children.empty()) out.push_back(v);
  }
  return out;
}

Height MergeTree::min_height() const {
  if (vertices_.empty()) throw std::logic_error("min_height of an empty tree");
  Height lo = vertices_.front().height;
  for (const auto& v : vertices_) lo = std::min(lo, v.height);
  return lo;
}

TreePoint MergeTree::canonical(TreePoint p) const {
  VertexIndex v = p.edge;
  while (vertices_[v].parent != kNoVertex && vertices_[vertices_[v].parent].height <= p.height) {
    v = vertices_[v].parent;
  }
  return {v, std::move(p.height)};
}

std::vector<VertexIndex> MergeTree::bottom_up_order() const {
  std::vector<VertexIndex> order;
  order.reserve(vertices_.size());
  if (root_ == kNoVertex) return order;
  order.push_back(root_);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexIndex c : vertices_[order[i]].children) order.push_back(c);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

std::optional<TreeViolation> first_violation(const MergeTree& tree) {
  if (tree.vertices_.empty()) return TreeViolation{"empty tree", {}};
  if (!tree.duplicate_ids_.empty()) return TreeViolation{"duplicate vertex id", {tree.duplicate_ids_.front()}};
  if (!tree.unknown_parents_.empty()) return TreeViolation{"unknown parent id", {tree.unknown_parents_.front()}};
  if (tree.parentless_ != 1) {
    std::vector<std::string> roots;
    for (const auto& v : tree.vertices_) {
      if (v.parent == kNoVertex) roots.push_back(v.id);
    }
    return TreeViolation{"not a single rooted tree", roots};
  }
  // Every vertex must reach the root; anything else sits on a parent cycle.
  const auto reached = tree.bottom_up_order().size();
  if (reached != tree.vertices_.size()) {
    std::vector<bool> seen(tree.vertices_.size(), false);
    for (VertexIndex v : tree.bottom_up_order()) seen[v] = true;
    for (VertexIndex v = 0; v < seen.size(); ++v) {
      if (!seen[v]) return TreeViolation{"not a single rooted tree", {tree.vertices_[v].id}};
    }
  }
  for (const auto& v : tree.vertices_) {
    if (v.parent == kNoVertex) continue;
    const auto& p = tree.vertices_[v.parent];
    if (!(p.height > v.height)) return TreeViolation{"parent not above child", {p.id, v.id}};
  }
  return std::nullopt;
}

ValidityReport validate(const MergeTree& tree) { return {first_violation(tree)}; }

void require_valid(const MergeTree& tree, std::string_view what) {
  auto report = validate(tree);
  if (report.ok()) return;
  std::string msg(what);
  msg += ": invalid merge tree: " + report.violation->rule;
  if (!report.violation->vertices.empty()) {
    msg += " (";
    for (std::size_t i = 0; i < report.violation->vertices.size(); ++i) {
      if (i) msg += ", ";
      msg += report.violation->vertices[i];
    }
    msg += ")";
  }
  throw std::invalid_argument(msg);
}

TreePoint ancestor_at(const MergeTree& tree, const TreePoint& p, const Height& h) {
  if (h < p.height) throw std::invalid_argument("not an ancestor height");
  return tree.canonical({p.edge, h});
}

bool precedes(const MergeTree& tree, const TreePoint& lo, const TreePoint& hi) {
  if (hi.height < lo.height) return false;
  return ancestor_at(tree, lo, hi.height) == tree.canonical(hi);
}

VertexIndex nca_vertex(const MergeTree& tree, VertexIndex a, VertexIndex b) {
  // Climb whichever side is lower; heights strictly increase towards the root.
  while (a != b) {
    if (tree.height(a) < tree.height(b) || (tree.height(a) == tree.height(b) && tree.parent(a) != kNoVertex)) {
      a = tree.parent(a);
    } else {
      b = tree.parent(b);
    }
  }
  return a;
}

TreePoint nca(const MergeTree& tree, const TreePoint& p1, const TreePoint& p2) {
  const TreePoint a = tree.canonical(p1);
  const TreePoint b = tree.canonical(p2);
  const VertexIndex c = nca_vertex(tree, a.edge, b.edge);
  Height h = std::max({a.height, b.height, tree.height(c)});
  return tree.canonical({c, std::move(h)});
}

Height tree_distance(const MergeTree& tree, const TreePoint& p1, const TreePoint& p2) {
  return nca(tree, p1, p2).height - std::min(p1.height, p2.height);
}

std::string canonical_form(const MergeTree& tree) {
  std::vector<std::string> form(tree.size());
  for (VertexIndex v : tree.bottom_up_order()) {
    std::vector<std::string> parts;
    for (VertexIndex c : tree.children(v)) parts.push_back(std::move(form[c]));
    std::sort(parts.begin(), parts.end());
    std::string s = "(" + tree.height(v).str();
    for (auto& part : parts) s += part;
    s += ")";
    form[v] = std::move(s);
  }
  return tree.root() == kNoVertex ? std::string{} : form[tree.root()];
}

SimplifiedTree simplify(const MergeTree& tree) {
  const auto order = tree.bottom_up_order();
  auto dropped = [&](VertexIndex v) { return tree.children(v).size() == 1; };

  std::vector<VertexIndex> host(tree.size(), kNoVertex);
  std::vector<VertexIndex> index(tree.size(), kNoVertex);
  VertexIndex next = 0;
  for (VertexIndex v = 0; v < tree.size(); ++v) {
    if (!dropped(v)) index[v] = next++;
  }
  for (VertexIndex v : order) host[v] = dropped(v) ? host[tree.children(v)[0]] : index[v];

  std::vector<NodeSpec> nodes;
  for (VertexIndex v = 0; v < tree.size(); ++v) {
    if (dropped(v)) continue;
    NodeSpec n{tree.id(v), tree.height(v), std::nullopt};
    VertexIndex p = tree.parent(v);
    while (p != kNoVertex && dropped(p)) p = tree.parent(p);
    if (p != kNoVertex) n.parent = tree.id(p);
    nodes.push_back(std::move(n));
  }
  return {MergeTree(std::move(nodes)), std::move(host)};
}

}  // namespace mtavg
