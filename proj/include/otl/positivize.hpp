#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "otl/diagram.hpp"
#include "otl/thompson.hpp"

namespace otl {

enum class LeafClass { Left, Middle, Right };

const char* leaf_class_name(LeafClass c);

struct LeafInfo {
  int leaf = 0;
  LeafClass cls = LeafClass::Left;
  bool rightmost = false;  // the last leaf carries no negative crossing
};

// Position of every leaf of a ternary tree among its parent's children. Throws for a single leaf.
std::vector<LeafInfo> classify_leaves(const PlaneTree& t3);

struct PositivizeStep {
  int leaf = 0;
  LeafClass cls = LeafClass::Left;
  std::string move;  // "R2", "R1", "nugatory", "detour"
  int removed = 0;   // crossings removed
  int added = 0;     // crossings created
};

struct PositivizeOptions {
  bool certify = true;  // compare the Jones polynomial before and after every move
  int max_piece = 4;    // longest strand piece a detour may reroute
  bool right_to_left = false;
};

struct PositivizeResult {
  LinkDiagram raw;      // diagram of the unreduced pair (alpha(T), right vine)
  LinkDiagram diagram;  // all crossings positive
  PlaneTree ternary_top;
  std::vector<PositivizeStep> log;
};

// Removes every negative crossing of the diagram of an oriented positive element by
// leaf-local R2 moves and detours. Throws NotOrientedPositive or MoveSearchFailed.
PositivizeResult positivize_traced(const GroupElement& g, const PositivizeOptions& opt = {});
LinkDiagram positivize(const GroupElement& g, const PositivizeOptions& opt = {});

// Number of right leaves of the ternary top tree of alpha_inverse(g).
int right_leaf_bound(const GroupElement& g);

nlohmann::json positivize_to_json(const PositivizeResult& r);

}  // namespace otl
