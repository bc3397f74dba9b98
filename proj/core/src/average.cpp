#include "mtavg/average.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "mtavg/interleave.hpp"
#include "mtavg/verify.hpp"

namespace mtavg {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::ShiftedT1: return "SHIFTED_T1";
    case Provenance::GraftedT2: return "GRAFTED_T2";
    case Provenance::MergedNca: return "MERGED_NCA";
  }
  return "?";
}

std::string to_string(SourceTree s) { return s == SourceTree::T1 ? "T1" : "T2"; }

VertexIndex AverageDraft::resolve(VertexIndex v) const {
  while (!vertices[v].alive) v = vertices[v].forward;
  return v;
}

namespace {

std::string fresh_id(AverageDraft& d, std::string base) {
  while (!d.used_ids.insert(base).second) base += "'";
  return base;
}

VertexIndex add_vertex(AverageDraft& d, const std::string& base, Height h, VertexIndex parent, Provenance tag) {
  AverageDraft::Vertex v;
  v.id = fresh_id(d, base);
  v.height = std::move(h);
  v.parent = parent;
  v.provenance = tag;
  d.vertices.push_back(std::move(v));
  const VertexIndex idx = d.vertices.size() - 1;
  if (parent != kNoVertex) d.vertices[parent].children.push_back(idx);
  return idx;
}

void detach(AverageDraft& d, VertexIndex child) {
  const VertexIndex p = d.vertices[child].parent;
  if (p == kNoVertex) return;
  auto& ch = d.vertices[p].children;
  ch.erase(std::find(ch.begin(), ch.end(), child));
  d.vertices[child].parent = kNoVertex;
}

void attach(AverageDraft& d, VertexIndex child, VertexIndex parent) {
  d.vertices[child].parent = parent;
  d.vertices[parent].children.push_back(child);
}

/// New vertex at height h on the edge above `lower`.
VertexIndex subdivide(AverageDraft& d, VertexIndex lower, const Height& h, Provenance tag) {
  const VertexIndex p = d.vertices[lower].parent;
  detach(d, lower);
  const VertexIndex mid = add_vertex(d, d.vertices[lower].id + "~" + h.str(), h, p, tag);
  attach(d, lower, mid);
  return mid;
}

/// Vertex at height h above v, created if the height falls inside an edge.
VertexIndex vertex_at(AverageDraft& d, VertexIndex v, const Height& h) {
  while (d.vertices[v].parent != kNoVertex && d.vertices[d.vertices[v].parent].height <= h) v = d.vertices[v].parent;
  if (d.vertices[v].height == h) return v;
  return subdivide(d, v, h, Provenance::ShiftedT1);
}

VertexIndex draft_nca(const AverageDraft& d, VertexIndex a, VertexIndex b) {
  while (a != b) {
    if (d.vertices[a].height <= d.vertices[b].height && d.vertices[a].parent != kNoVertex) {
      a = d.vertices[a].parent;
    } else {
      b = d.vertices[b].parent;
    }
  }
  return a;
}

/// Glues the upward paths of `members` (all at one height) from height t to
/// their common ancestor `top`, keeping the path of the first member.
void glue_paths(AverageDraft& d, const std::vector<VertexIndex>& members, const Height& t, VertexIndex top) {
  std::vector<VertexIndex> cuts;
  for (VertexIndex m : members) {
    const VertexIndex x = vertex_at(d, m, t);
    if (std::find(cuts.begin(), cuts.end(), x) == cuts.end()) cuts.push_back(x);
  }

  std::map<Height, VertexIndex> kept;
  std::set<VertexIndex> on_kept;
  for (VertexIndex y = cuts.front(); y != top; y = d.vertices[y].parent) {
    kept.emplace(d.vertices[y].height, y);
    on_kept.insert(y);
  }

  std::vector<VertexIndex> dropped;
  std::set<VertexIndex> is_dropped;
  for (std::size_t j = 1; j < cuts.size(); ++j) {
    for (VertexIndex y = cuts[j]; y != top && !on_kept.contains(y) && !is_dropped.contains(y);
         y = d.vertices[y].parent) {
      dropped.push_back(y);
      is_dropped.insert(y);
    }
  }

  std::vector<VertexIndex> into(dropped.size());
  for (std::size_t i = 0; i < dropped.size(); ++i) {
    const Height h = d.vertices[dropped[i]].height;
    auto it = kept.find(h);
    if (it == kept.end()) {
      auto below = std::prev(kept.lower_bound(h));
      it = kept.emplace(h, subdivide(d, below->second, h, Provenance::MergedNca)).first;
    }
    into[i] = it->second;
    d.vertices[into[i]].provenance = Provenance::MergedNca;
  }

  for (std::size_t i = 0; i < dropped.size(); ++i) {
    const VertexIndex y = dropped[i];
    const std::vector<VertexIndex> children = d.vertices[y].children;
    for (VertexIndex c : children) {
      if (is_dropped.contains(c)) continue;
      detach(d, c);
      attach(d, c, into[i]);
    }
    if (!is_dropped.contains(d.vertices[y].parent)) detach(d, y);
  }
  for (std::size_t i = 0; i < dropped.size(); ++i) {
    auto& v = d.vertices[dropped[i]];
    v.alive = false;
    v.forward = into[i];
    v.children.clear();
    v.parent = kNoVertex;
  }
}

}  // namespace

AverageDraft shift_step(const AugmentedTree& t1_hat, const Height& eps) {
  if (eps < Height(0)) throw std::invalid_argument("epsilon must be non-negative");
  const auto& t = t1_hat.tree;
  const Height half = eps.half();
  AverageDraft d;
  d.epsilon = eps;
  d.vertices.reserve(t.size());
  for (VertexIndex v = 0; v < t.size(); ++v) {
    AverageDraft::Vertex x;
    x.id = t.id(v);
    x.height = t.height(v) + half;
    x.parent = t.parent(v);
    x.children.assign(t.children(v).begin(), t.children(v).end());
    d.vertices.push_back(std::move(x));
    d.used_ids.insert(t.id(v));
    d.t1_vertex.push_back(v);
  }
  return d;
}

void graft_step(AverageDraft& d, const GoodMapWitness& witness) {
  const auto& a = witness.source();
  const auto& b = witness.target();
  if (d.epsilon != witness.epsilon()) throw std::invalid_argument("draft and witness disagree on epsilon");
  if (d.t1_vertex.size() != a.size()) throw std::invalid_argument("draft does not come from this witness");

  const auto in_image = image_mask(witness);
  for (VertexIndex w = 0; w < b.size(); ++w) {
    if (in_image[w] && b.parent(w) != kNoVertex && !in_image[b.parent(w)]) {
      throw std::invalid_argument("malformed witness: image is not closed upwards at " + b.id(w));
    }
  }

  std::vector<VertexIndex> first(b.size(), kNoVertex);
  for (VertexIndex v = 0; v < a.size(); ++v) {
    VertexIndex& f = first[witness.assign[v]];
    if (f == kNoVertex || a.id(v) < a.id(f)) f = v;
  }

  const Height& eps = d.epsilon;
  const Height half = eps.half();
  for (VertexIndex w = 0; w < b.size(); ++w) {
    if (!in_image[w]) continue;
    const Height floor = b.height(w) - eps;
    const VertexIndex anchor = d.t1_vertex[first[w]];
    bool attached = false;

    auto copy = [&](auto&& self, VertexIndex x, VertexIndex under) -> void {
      if (b.height(x) >= floor) {
        const VertexIndex n = add_vertex(d, b.id(x), b.height(x) - half, under, Provenance::GraftedT2);
        d.vertices[n].graft_anchor = anchor;
        d.grafted.push_back({b.id(x), b.height(x), n});
        for (VertexIndex y : b.children(x)) self(self, y, n);
        return;
      }
      if (b.height(b.parent(x)) > floor) {
        const VertexIndex n = add_vertex(d, b.id(x) + "~cut", floor - half, under, Provenance::GraftedT2);
        d.vertices[n].graft_anchor = anchor;
        d.grafted.push_back({b.id(x), floor, n});
      }
    };
    for (VertexIndex c : b.children(w)) {
      if (in_image[c] || !(floor < b.height(w))) continue;
      copy(copy, c, anchor);
      attached = true;
    }
    if (attached) d.attachments.push_back({b.id(w), b.height(w), first[w]});
  }
}

void lower_nca_step(AverageDraft& d, const GoodMapWitness& witness) {
  const auto& a = witness.source();
  const auto& levels = witness.pair->t1_hat.level;

  std::map<VertexIndex, std::vector<VertexIndex>> preimages;
  for (VertexIndex v = 0; v < a.size(); ++v) preimages[witness.assign[v]].push_back(v);

  std::vector<std::vector<VertexIndex>> groups;
  for (auto& [w, s] : preimages) {
    if (s.size() < 2) continue;
    std::sort(s.begin(), s.end(), [&](VertexIndex x, VertexIndex y) { return a.id(x) < a.id(y); });
    groups.push_back(s);
  }
  std::sort(groups.begin(), groups.end(), [&](const auto& x, const auto& y) {
    if (levels[x[0]] != levels[y[0]]) return levels[x[0]] < levels[y[0]];
    return a.id(x[0]) < a.id(y[0]);
  });

  for (const auto& s : groups) {
    std::vector<VertexIndex> members;
    for (VertexIndex v : s) {
      const VertexIndex m = d.resolve(d.t1_vertex[v]);
      if (std::find(members.begin(), members.end(), m) == members.end()) members.push_back(m);
    }
    if (members.size() < 2) continue;
    VertexIndex top = members[0];
    for (VertexIndex m : members) top = draft_nca(d, top, m);
    const Height t = d.vertices[members[0]].height + d.epsilon;
    if (d.vertices[top].height <= t) continue;
    glue_paths(d, members, t, top);
  }
}

AverageResult finish_average(const AverageDraft& d, const GoodMapWitness& witness) {
  const auto& a = witness.source();
  const Height half = d.epsilon.half();

  std::vector<VertexIndex> index(d.vertices.size(), kNoVertex);
  std::vector<NodeSpec> nodes;
  for (VertexIndex v = 0; v < d.vertices.size(); ++v) {
    if (!d.vertices[v].alive) continue;
    index[v] = nodes.size();
    const auto& x = d.vertices[v];
    nodes.push_back({x.id, x.height, std::nullopt});
    if (x.parent != kNoVertex) nodes.back().parent = d.vertices[x.parent].id;
  }

  AverageResult out;
  out.t3 = MergeTree(std::move(nodes));
  out.epsilon = d.epsilon;
  out.witness = witness;
  const auto& t3 = out.t3;
  out.provenance.resize(t3.size());
  out.graft_anchor.resize(t3.size());
  for (VertexIndex v = 0; v < d.vertices.size(); ++v) {
    if (index[v] == kNoVertex) continue;
    out.provenance[index[v]] = d.vertices[v].provenance;
    if (const auto& anchor = d.vertices[v].graft_anchor) out.graft_anchor[index[v]] = t3.point(index[d.resolve(*anchor)]);
  }

  auto image_of = [&](VertexIndex draft_vertex) { return t3.point(index[d.resolve(draft_vertex)]); };

  std::vector<VertexIndex> t1_hit(t3.size(), kNoVertex);
  std::vector<bool> hit(t3.size(), false);
  for (VertexIndex s = 0; s < a.size(); ++s) {
    const TreePoint p = image_of(d.t1_vertex[s]);
    out.gamma.push_back({SourceTree::T1, a.id(s), a.height(s), p, false});
    if (t1_hit[p.edge] == kNoVertex) t1_hit[p.edge] = s;
    hit[p.edge] = true;
  }
  for (const auto& g : d.grafted) {
    const TreePoint p = image_of(g.vertex);
    out.gamma.push_back({SourceTree::T2, g.source, g.source_height, p, false});
    hit[p.edge] = true;
  }
  for (const auto& at : d.attachments) {
    out.gamma.push_back({SourceTree::T2, at.source, at.source_height, image_of(d.t1_vertex[at.t1_vertex]), true});
  }

  // Vertices created by gluing carry no input vertex; give each the T1 edge
  // point that the average map sends there.
  for (VertexIndex z = 0; z < t3.size(); ++z) {
    if (hit[z]) continue;
    std::deque<VertexIndex> queue{z};
    VertexIndex below = kNoVertex;
    while (!queue.empty() && below == kNoVertex) {
      const VertexIndex u = queue.front();
      queue.pop_front();
      if (t1_hit[u] != kNoVertex) below = t1_hit[u];
      for (VertexIndex c : t3.children(u)) queue.push_back(c);
    }
    if (below == kNoVertex) throw std::logic_error("average vertex " + t3.id(z) + " has no T1 vertex below it");
    const TreePoint src = ancestor_at(a, a.point(below), t3.height(z) - half);
    out.gamma.push_back({SourceTree::T1, a.id(src.edge), src.height, t3.point(z), false});
    hit[z] = true;
  }
  return out;
}

AverageResult build_average(const GoodMapWitness& witness) {
  if (!witness.pair) throw std::invalid_argument("malformed witness: no augmented pair");
  const ValidationReport report = validate_good_map(witness, S2Mode::Prime);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw std::invalid_argument("witness is not " + witness.epsilon().str() + "-good: " + to_string(v.condition) + " " +
                                v.explanation);
  }
  AverageDraft d = shift_step(witness.pair->t1_hat, witness.epsilon());
  graft_step(d, witness);
  lower_nca_step(d, witness);
  return finish_average(d, witness);
}

AverageResult average_tree(const MergeTree& t1, const MergeTree& t2, std::optional<Height> eps) {
  require_valid(t1, "T1");
  require_valid(t2, "T2");
  GoodMapWitness witness;
  if (eps) {
    Decision d = decide(t1, t2, *eps);
    if (!d.yes) throw std::invalid_argument("epsilon " + eps->str() + " is below the interleaving distance");
    witness = std::move(*d.witness);
  } else {
    witness = distance(t1, t2).witness;
  }
  AverageResult result = build_average(witness);
  const MidpointReport report = check_midpoint(t1, t2, result);
  if (!report.ok()) throw CertificationError(report.describe());
  return result;
}

AverageResult simplified(const AverageResult& result) {
  SimplifiedTree s = simplify(result.t3);
  AverageResult out;
  out.epsilon = result.epsilon;
  out.witness = result.witness;
  auto move_point = [&](const TreePoint& p) { return s.tree.canonical({s.host[p.edge], p.height}); };

  out.provenance.resize(s.tree.size());
  out.graft_anchor.resize(s.tree.size());
  for (VertexIndex v = 0; v < result.t3.size(); ++v) {
    if (result.t3.children(v).size() == 1) continue;
    const VertexIndex n = s.host[v];
    out.provenance[n] = result.provenance[v];
    if (result.graft_anchor[v]) out.graft_anchor[n] = move_point(*result.graft_anchor[v]);
  }
  for (const auto& e : result.gamma) {
    GammaEntry m = e;
    m.target = move_point(e.target);
    out.gamma.push_back(std::move(m));
  }
  out.t3 = std::move(s.tree);
  return out;
}

}  // namespace mtavg
