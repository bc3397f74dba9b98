#include "mtavg/goodmap.hpp"

#include <map>
#include <stdexcept>

namespace mtavg {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::S1: return "S1";
    case Condition::S2: return "S2";
    case Condition::S2Prime: return "S2'";
    case Condition::S3: return "S3";
  }
  return "?";
}

bool ValidationReport::has(Condition c) const {
  for (const auto& v : violations) {
    if (v.condition == c) return true;
  }
  return false;
}

GoodMapChecker::GoodMapChecker(std::shared_ptr<const AugmentedPair> pair)
    : pair_(std::move(pair)), two_eps_(pair_->epsilon + pair_->epsilon) {
  const auto& a = pair_->t1_hat.tree;
  lift_.reserve(a.size());
  for (VertexIndex v = 0; v < a.size(); ++v) lift_.push_back(ancestor_at(a, a.point(v), a.height(v) + two_eps_));
}

void GoodMapChecker::require_well_formed(const std::vector<VertexIndex>& assign) const {
  const auto& p1 = pair_->t1_hat;
  const auto& p2 = pair_->t2_hat;
  if (assign.size() != p1.tree.size()) throw std::invalid_argument("malformed witness: assignment is not total");
  for (VertexIndex v = 0; v < assign.size(); ++v) {
    const VertexIndex w = assign[v];
    if (w >= p2.tree.size()) throw std::invalid_argument("malformed witness: unknown target for " + p1.tree.id(v));
    if (p1.level[v] != p2.level[w]) {
      throw std::invalid_argument("malformed witness: " + p1.tree.id(v) + " -> " + p2.tree.id(w) +
                                  " is not level preserving");
    }
    const VertexIndex pv = p1.tree.parent(v);
    if (pv != kNoVertex && p2.tree.parent(w) != assign[pv]) {
      throw std::invalid_argument("malformed witness: " + p1.tree.id(v) + " -> " + p2.tree.id(w) +
                                  " is not parent compatible");
    }
  }
}

void GoodMapChecker::check_s1(const std::vector<VertexIndex>& assign, ValidationReport& out, bool stop) const {
  const auto& a = pair_->t1_hat.tree;
  const auto& b = pair_->t2_hat.tree;
  for (VertexIndex v = 0; v < assign.size(); ++v) {
    if (b.height(assign[v]) != a.height(v) + pair_->epsilon) {
      out.violations.push_back({Condition::S1, {a.id(v), b.id(assign[v])}, "image height is not height + epsilon"});
      if (stop) return;
    }
  }
}

void GoodMapChecker::check_s2_prime(const std::vector<VertexIndex>& assign, ValidationReport& out,
                                    bool stop) const {
  const auto& a = pair_->t1_hat.tree;
  // First preimage of each target; every other preimage must share its lift.
  std::map<VertexIndex, VertexIndex> first;
  for (VertexIndex v = 0; v < assign.size(); ++v) {
    auto [it, inserted] = first.emplace(assign[v], v);
    if (inserted) continue;
    if (lift_[it->second] != lift_[v]) {
      out.violations.push_back({Condition::S2Prime,
                                {a.id(it->second), a.id(v)},
                                "same image but the 2*epsilon ancestors at height " +
                                    lift_[v].height.str() + " differ"});
      if (stop) return;
    }
  }
}

void GoodMapChecker::check_s2_full(const std::vector<VertexIndex>& assign, ValidationReport& out, bool stop) const {
  const auto& a = pair_->t1_hat.tree;
  const auto& b = pair_->t2_hat.tree;
  for (VertexIndex v1 = 0; v1 < assign.size(); ++v1) {
    for (VertexIndex v2 = 0; v2 < assign.size(); ++v2) {
      if (v1 == v2) continue;
      if (!precedes(b, b.point(assign[v1]), b.point(assign[v2]))) continue;
      if (precedes(a, lift_[v1], lift_[v2])) continue;
      out.violations.push_back({Condition::S2,
                                {a.id(v1), a.id(v2)},
                                "image of the first precedes the second but 2*epsilon ancestors do not"});
      if (stop) return;
    }
  }
}

void GoodMapChecker::check_s3(const std::vector<VertexIndex>& assign, ValidationReport& out, bool stop) const {
  const auto& b = pair_->t2_hat.tree;
  std::vector<bool> in_image(b.size(), false);
  for (VertexIndex w : assign) in_image[w] = true;
  for (VertexIndex q = 0; q < b.size(); ++q) {
    if (in_image[q]) continue;
    VertexIndex up = b.parent(q);
    while (up != kNoVertex && !in_image[up]) up = b.parent(up);
    if (up == kNoVertex) {
      out.violations.push_back({Condition::S3, {b.id(q)}, "no ancestor in the image"});
      if (stop) return;
      continue;
    }
    if (b.height(up) - b.height(q) > two_eps_) {
      out.violations.push_back({Condition::S3,
                                {b.id(q), b.id(up)},
                                "uncovered vertex lies " + (b.height(up) - b.height(q)).str() +
                                    " below its nearest image ancestor"});
      if (stop) return;
    }
  }
}

ValidationReport GoodMapChecker::check(const std::vector<VertexIndex>& assign, S2Mode mode) const {
  require_well_formed(assign);
  ValidationReport out;
  check_s1(assign, out, false);
  if (mode == S2Mode::Prime) check_s2_prime(assign, out, false);
  else check_s2_full(assign, out, false);
  check_s3(assign, out, false);
  return out;
}

bool GoodMapChecker::passes(const std::vector<VertexIndex>& assign, S2Mode mode) const {
  require_well_formed(assign);
  ValidationReport out;
  check_s1(assign, out, true);
  if (!out.ok()) return false;
  if (mode == S2Mode::Prime) check_s2_prime(assign, out, true);
  else check_s2_full(assign, out, true);
  if (!out.ok()) return false;
  check_s3(assign, out, true);
  return out.ok();
}

ValidationReport validate_good_map(const GoodMapWitness& witness, S2Mode mode) {
  return GoodMapChecker(witness.pair).check(witness.assign, mode);
}

std::vector<bool> image_mask(const GoodMapWitness& witness) {
  std::vector<bool> in_image(witness.target().size(), false);
  for (VertexIndex w : witness.assign) in_image[w] = true;
  return in_image;
}

}  // namespace mtavg
