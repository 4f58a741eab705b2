#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "otl/thompson.hpp"

namespace otl {

// A node whose children are each a leaf or full (internal with three leaf children), at least one
// full. Patterns by the set of full children: {1} 1, {2} 2, {3} 3, {2,3} 4, {1,3} 5, {1,2} 6, all 7.
struct PatternMatch {
  int node = 0;  // preorder id
  int pattern = 0;
};

struct ReductionStep {
  int node = 0;
  int pattern = 0;
  int leaves_removed = 0;
  int cost = 0;  // 1 iff pattern 6
};

// Pattern at a given node, or 0 if the node does not match.
int pattern_at(const PlaneTree& t3, int node);
// Deepest matching node, leftmost among equals; nullopt for a leaf or a single caret.
std::optional<PatternMatch> match_pattern(const PlaneTree& t3);
std::vector<PatternMatch> all_matches(const PlaneTree& t3);
// Full children become leaves; under pattern 6 the whole node becomes a leaf. Throws PatternMismatch.
std::pair<PlaneTree, ReductionStep> apply_move(const PlaneTree& t3, int node, int pattern);

struct ReductionTrace {
  int bound = 0;
  std::vector<ReductionStep> steps;
  std::vector<PlaneTree> trees;  // tree before each step, then the final tree
};

// Reduces the ternary top tree of alpha_inverse(g) to a leaf or single caret; bound = number of
// pattern-6 steps. Throws NotOrientedPositive.
ReductionTrace unknotting_bound(const GroupElement& g);
ReductionTrace reduce_tree(const PlaneTree& t3);
// Smallest 6-move count over every choice of matching node at every step (trees up to 15 leaves).
int min_bound_over_orders(const PlaneTree& t3);

struct SmoothingResult {
  PlaneTree top;     // binary, n - 5 leaves
  PlaneTree bottom;  // binary right vine of the same size
  GroupElement element;
};

// Replaces the binary image of a pattern-6 node by a single caret. Throws PatternMismatch.
SmoothingResult apply_smoothing_move(const PlaneTree& t3, int node);

nlohmann::json trace_to_json(const ReductionTrace& t);

}  // namespace otl
