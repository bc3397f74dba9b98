#include "mtavg/verify.hpp"

#include <map>

#include "mtavg/interleave.hpp"

namespace mtavg {

std::vector<std::string> MidpointReport::failing_sides() const {
  std::vector<std::string> out;
  if (!t1_side) out.push_back("T1");
  if (!t2_side) out.push_back("T2");
  return out;
}

std::string MidpointReport::describe() const {
  if (ok()) return "both halves certified at " + half_epsilon.str();
  std::string s = "midpoint certification failed at " + half_epsilon.str() + " on side";
  for (const auto& side : failing_sides()) s += " " + side;
  return s;
}

MidpointReport check_midpoint(const MergeTree& t1, const MergeTree& t2, const MergeTree& t3, const Height& eps) {
  require_valid(t3, "average");
  MidpointReport out;
  out.half_epsilon = eps.half();
  if (auto d = decide(t1, t3, out.half_epsilon); d.yes) out.t1_side = std::move(d.witness);
  if (auto d = decide(t2, t3, out.half_epsilon); d.yes) out.t2_side = std::move(d.witness);
  return out;
}

MidpointReport check_midpoint(const MergeTree& t1, const MergeTree& t2, const AverageResult& result) {
  return check_midpoint(t1, t2, result.t3, result.epsilon);
}

std::string to_string(GammaProperty p) {
  switch (p) {
    case GammaProperty::Domain: return "domain";
    case GammaProperty::HeightShift: return "height shift";
    case GammaProperty::Monotone: return "monotonicity";
    case GammaProperty::Surjective: return "surjectivity";
    case GammaProperty::Provenance: return "multi-preimage provenance";
    case GammaProperty::StepBound: return "common ancestor bound";
    case GammaProperty::GraftDepth: return "graft depth bound";
  }
  return "?";
}

bool GammaReport::has(GammaProperty p) const {
  for (const auto& i : issues) {
    if (i.property == p) return true;
  }
  return false;
}

namespace {

std::string show(const MergeTree& t, const TreePoint& p) { return t.id(p.edge) + "@" + p.height.str(); }

}  // namespace

GammaReport check_gamma(const AverageResult& result) {
  GammaReport out;
  auto fail = [&](GammaProperty p, std::string detail) { out.issues.push_back({p, std::move(detail)}); };

  const auto& t3 = result.t3;
  const auto& a = result.witness.source();
  const auto& b = result.witness.target();
  const Height half = result.epsilon.half();

  struct Resolved {
    TreePoint source;
    TreePoint target;
    const GammaEntry* entry;
  };
  std::vector<Resolved> from_t1, from_t2;
  std::vector<bool> t1_seen(a.size(), false);

  for (const auto& e : result.gamma) {
    const MergeTree& src = e.source_tree == SourceTree::T1 ? a : b;
    const auto host = src.find(e.source);
    if (!host || e.source_height < src.height(*host) || e.target.edge >= t3.size() ||
        e.target.height < t3.height(e.target.edge)) {
      fail(GammaProperty::Domain, "entry " + to_string(e.source_tree) + ":" + e.source + " does not name a point");
      continue;
    }
    Resolved r{src.canonical({*host, e.source_height}), t3.canonical(e.target), &e};
    if (e.source_tree == SourceTree::T1) {
      const Height want = e.source_height + half;
      if (r.target.height != want) {
        fail(GammaProperty::HeightShift, "T1 point " + show(a, r.source) + " lands at " + r.target.height.str());
      }
      if (r.source == a.point(r.source.edge)) t1_seen[r.source.edge] = true;
      from_t1.push_back(std::move(r));
    } else {
      const Height want = e.source_height - half;
      if (r.target.height != want) {
        fail(GammaProperty::HeightShift, "T2 point " + show(b, r.source) + " lands at " + r.target.height.str());
      }
      from_t2.push_back(std::move(r));
    }
  }
  for (VertexIndex v = 0; v < a.size(); ++v) {
    if (!t1_seen[v]) fail(GammaProperty::Domain, "T1 vertex " + a.id(v) + " has no image");
  }

  auto monotone = [&](const MergeTree& src, const std::vector<Resolved>& rs, const std::string& tag) {
    for (const auto& p : rs) {
      for (const auto& q : rs) {
        if (&p == &q || !precedes(src, p.source, q.source)) continue;
        if (!precedes(t3, p.target, q.target)) {
          fail(GammaProperty::Monotone, tag + " " + show(src, p.source) + " below " + show(src, q.source) +
                                            " but " + show(t3, p.target) + " not below " + show(t3, q.target));
        }
      }
    }
  };
  monotone(a, from_t1, "T1");

  // On T2 the map covers grafted points only; an attachment entry stands for
  // its own graft, so it is compared only with the points hanging from it.
  std::vector<Resolved> grafted, attached;
  for (const auto& r : from_t2) (r.entry->attachment ? attached : grafted).push_back(r);
  monotone(b, grafted, "T2");
  for (const auto& p : grafted) {
    const Resolved* lowest = nullptr;
    for (const auto& q : attached) {
      if (precedes(b, p.source, q.source) && (!lowest || precedes(b, q.source, lowest->source))) lowest = &q;
    }
    if (lowest && !precedes(t3, p.target, lowest->target)) {
      fail(GammaProperty::Monotone, "T2 " + show(b, p.source) + " hangs from " + show(b, lowest->source) + " but " +
                                        show(t3, p.target) + " not below " + show(t3, lowest->target));
    }
  }

  std::vector<std::vector<const Resolved*>> preimages(t3.size());
  for (const auto* rs : {&from_t1, &from_t2}) {
    for (const auto& r : *rs) {
      if (r.target == t3.point(r.target.edge)) preimages[r.target.edge].push_back(&r);
    }
  }
  for (VertexIndex v = 0; v < t3.size(); ++v) {
    if (preimages[v].empty()) {
      fail(GammaProperty::Surjective, "vertex " + t3.id(v) + " is not hit");
      continue;
    }
    if (preimages[v].size() < 2) continue;
    for (const auto* r : preimages[v]) {
      if (r->entry->source_tree == SourceTree::T2 && !r->entry->attachment) {
        fail(GammaProperty::Provenance, "vertex " + t3.id(v) + " has several preimages including T2 point " +
                                            show(b, r->source));
      }
    }
  }

  // Witness image classes, looked up through the T1 vertex entries.
  std::vector<const Resolved*> vertex_image(a.size(), nullptr);
  for (const auto& r : from_t1) {
    if (r.source == a.point(r.source.edge) && !vertex_image[r.source.edge]) vertex_image[r.source.edge] = &r;
  }
  std::map<VertexIndex, std::vector<VertexIndex>> classes;
  for (VertexIndex v = 0; v < a.size() && v < result.witness.assign.size(); ++v) {
    classes[result.witness.assign[v]].push_back(v);
  }
  for (const auto& [w, s] : classes) {
    if (s.size() < 2) continue;
    std::optional<TreePoint> top;
    for (VertexIndex v : s) {
      if (!vertex_image[v]) continue;
      top = top ? nca(t3, *top, vertex_image[v]->target) : vertex_image[v]->target;
    }
    if (!top) continue;
    const Height bound = a.height(s.front()) + half + result.epsilon;
    if (top->height > bound) {
      fail(GammaProperty::StepBound, "preimages of " + b.id(w) + " meet at " + top->height.str() + ", above " +
                                         bound.str());
    }
  }

  for (VertexIndex v = 0; v < t3.size(); ++v) {
    if (result.provenance.size() != t3.size() || result.provenance[v] != Provenance::GraftedT2 || !t3.is_leaf(v)) {
      continue;
    }
    std::optional<TreePoint> anchor;
    if (result.graft_anchor.size() == t3.size()) anchor = result.graft_anchor[v];
    if (!anchor) {
      fail(GammaProperty::GraftDepth, "grafted leaf " + t3.id(v) + " has no attachment");
      continue;
    }
    const Height depth = anchor->height - t3.height(v);
    if (depth < Height(0) || depth > result.epsilon) {
      fail(GammaProperty::GraftDepth, "grafted leaf " + t3.id(v) + " hangs " + depth.str() + " below its attachment");
    }
  }
  return out;
}

}  // namespace mtavg
