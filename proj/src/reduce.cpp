#include "otl/reduce.hpp"

#include <unordered_map>

#include "otl/error.hpp"

namespace otl {

namespace {

bool is_full(const PlaneTree& t) {
  if (t.is_leaf()) return false;
  for (const auto& c : t.children())
    if (!c.is_leaf()) return false;
  return true;
}

int pattern_of(const PlaneTree& node) {
  if (node.is_leaf() || node.arity() != 3) return 0;
  int mask = 0;
  for (int k = 0; k < 3; ++k) {
    const PlaneTree& c = node.child(k);
    if (is_full(c)) mask |= 1 << k;
    else if (!c.is_leaf()) return 0;
  }
  // mask bit k set <=> child k+1 full
  static const int table[8] = {0, 1, 2, 6, 3, 5, 4, 7};
  return table[mask];
}

}  // namespace

int pattern_at(const PlaneTree& t3, int node) { return pattern_of(subtree(t3, node)); }

std::vector<PatternMatch> all_matches(const PlaneTree& t3) {
  if (t3.arity() != 3) throw Error(ErrorKind::ArityMismatch, "reduction moves act on ternary trees");
  std::vector<PatternMatch> out;
  const auto info = preorder(t3);
  for (const auto& n : info) {
    if (n.leaf) continue;
    const int p = pattern_at(t3, n.id);
    if (p) out.push_back({n.id, p});
  }
  return out;
}

std::optional<PatternMatch> match_pattern(const PlaneTree& t3) {
  const auto info = preorder(t3);
  std::optional<PatternMatch> best;
  int best_depth = -1;
  for (const auto& m : all_matches(t3)) {
    // Preorder visits left before right, so the first match at a depth is the leftmost.
    if (info[m.node].depth > best_depth) {
      best = m;
      best_depth = info[m.node].depth;
    }
  }
  return best;
}

std::pair<PlaneTree, ReductionStep> apply_move(const PlaneTree& t3, int node, int pattern) {
  const PlaneTree sub = subtree(t3, node);
  if (pattern < 1 || pattern > 7 || pattern_of(sub) != pattern)
    throw Error(ErrorKind::PatternMismatch,
                "node " + std::to_string(node) + " does not match pattern " + std::to_string(pattern));
  ReductionStep step;
  step.node = node;
  step.pattern = pattern;
  PlaneTree replacement(3);
  if (pattern == 6) {
    step.cost = 1;
  } else {
    std::vector<PlaneTree> kids = sub.children();
    for (auto& c : kids)
      if (!c.is_leaf()) c = PlaneTree(3);
    replacement = PlaneTree::node(std::move(kids));
  }
  step.leaves_removed = sub.leaf_count() - replacement.leaf_count();
  return {replace_subtree(t3, node, replacement), step};
}

ReductionTrace reduce_tree(const PlaneTree& t3) {
  if (t3.arity() != 3) throw Error(ErrorKind::ArityMismatch, "reduction moves act on ternary trees");
  ReductionTrace tr;
  PlaneTree t = t3;
  tr.trees.push_back(t);
  while (auto m = match_pattern(t)) {
    auto [next, step] = apply_move(t, m->node, m->pattern);
    tr.bound += step.cost;
    tr.steps.push_back(step);
    t = next;
    tr.trees.push_back(t);
  }
  if (!t.is_leaf() && !is_full(t)) throw Error(ErrorKind::Internal, "reduction stopped before the base case");
  return tr;
}

ReductionTrace unknotting_bound(const GroupElement& g) {
  if (!is_oriented_positive(g))
    throw Error(ErrorKind::NotOrientedPositive, "element is not in the positive oriented monoid");
  return reduce_tree(alpha_inverse(g).top());
}

int min_bound_over_orders(const PlaneTree& t3) {
  if (t3.leaf_count() > 15)
    throw Error(ErrorKind::BudgetExceeded, "exhaustive order search is limited to 15 leaves");
  std::unordered_map<PlaneTree, int, PlaneTreeHash> memo;
  auto rec = [&](auto&& self, const PlaneTree& t) -> int {
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    const auto ms = all_matches(t);
    int best = ms.empty() ? 0 : 1 << 20;
    for (const auto& m : ms) {
      auto [next, step] = apply_move(t, m.node, m.pattern);
      best = std::min(best, step.cost + self(self, next));
    }
    memo.emplace(t, best);
    return best;
  };
  return rec(rec, t3);
}

namespace {

// alpha of t3 with the image of node `target` replaced by a single binary caret.
PlaneTree alpha_with_caret(const PlaneTree& t, int target, int& id) {
  const int mine = id++;
  if (t.is_leaf()) return PlaneTree(2);
  if (mine == target) {
    id += t.leaf_count() + t.internal_count() - 1;
    return PlaneTree::caret(2);
  }
  PlaneTree a = alpha_with_caret(t.child(0), target, id);
  PlaneTree b = alpha_with_caret(t.child(1), target, id);
  PlaneTree c = alpha_with_caret(t.child(2), target, id);
  return PlaneTree::node({a, PlaneTree::node({b, c})});
}

}  // namespace

SmoothingResult apply_smoothing_move(const PlaneTree& t3, int node) {
  if (t3.arity() != 3) throw Error(ErrorKind::ArityMismatch, "reduction moves act on ternary trees");
  if (pattern_at(t3, node) != 6)
    throw Error(ErrorKind::PatternMismatch, "node " + std::to_string(node) + " does not match pattern 6");
  int id = 0;
  SmoothingResult r{alpha_with_caret(t3, node, id), PlaneTree(2), GroupElement(2)};
  r.bottom = right_vine(r.top.leaf_count(), 2);
  r.element = GroupElement(r.top, r.bottom);
  return r;
}

nlohmann::json trace_to_json(const ReductionTrace& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const auto& s = t.steps[k];
    steps.push_back({{"node", s.node},
                     {"pattern", s.pattern},
                     {"leavesRemoved", s.leaves_removed},
                     {"cost", s.cost},
                     {"before", print_tree(t.trees[k])},
                     {"after", print_tree(t.trees[k + 1])}});
  }
  return {{"bound", t.bound}, {"steps", steps}};
}

}  // namespace otl
