#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace otl {

// Rooted plane tree where every internal node has exactly `arity` children.
// Immutable; copies share structure.
class PlaneTree {
 public:
  explicit PlaneTree(int arity = 2);

  static PlaneTree leaf(int arity) { return PlaneTree(arity); }
  static PlaneTree node(std::vector<PlaneTree> children);
  // One internal node whose children are all leaves.
  static PlaneTree caret(int arity);

  int arity() const { return arity_; }
  bool is_leaf() const { return node_ == nullptr; }
  const std::vector<PlaneTree>& children() const;
  const PlaneTree& child(int k) const { return children()[static_cast<std::size_t>(k)]; }
  int leaf_count() const { return node_ ? node_->leaves : 1; }
  int internal_count() const { return node_ ? node_->internals : 0; }
  std::size_t hash() const { return node_ ? node_->hash : 0x9e3779b97f4a7c15ull; }

  friend bool operator==(const PlaneTree& a, const PlaneTree& b);
  friend bool operator!=(const PlaneTree& a, const PlaneTree& b) { return !(a == b); }

 private:
  struct Node {
    std::vector<PlaneTree> kids;
    int leaves = 0;
    int internals = 0;
    std::size_t hash = 0;
  };
  int arity_;
  std::shared_ptr<const Node> node_;
};

struct PlaneTreeHash {
  std::size_t operator()(const PlaneTree& t) const { return t.hash(); }
};

// Preorder record; leaves are nodes too. Leaf indices are 0..n-1 left to right.
struct NodeInfo {
  int id = 0;
  int parent = -1;
  int child_index = -1;
  int depth = 0;
  int first_leaf = 0;
  int last_leaf = 0;
  bool leaf = true;
};

PlaneTree parse_tree(std::string_view text, int arity);
std::string print_tree(const PlaneTree& t);

int leaf_count(const PlaneTree& t);
std::vector<NodeInfo> preorder(const PlaneTree& t);
PlaneTree subtree(const PlaneTree& t, int node_id);
PlaneTree replace_subtree(const PlaneTree& t, int node_id, const PlaneTree& s);

// Inclusive leaf range of the first child of an internal node.
std::pair<int, int> left_span(const PlaneTree& t, int node_id);

PlaneTree graft(const PlaneTree& t, int leaf, const PlaneTree& s);
// pieces[j] replaces leaf j; pieces.size() == leaf_count(t).
PlaneTree graft_all(const PlaneTree& t, const std::vector<PlaneTree>& pieces);
// For each leaf of t, the subtree of refinement r sitting at that leaf. t must be a prefix of r.
std::vector<PlaneTree> refinement_pieces(const PlaneTree& t, const PlaneTree& r);
// Smallest common refinement of two trees of equal arity.
PlaneTree common_refinement(const PlaneTree& a, const PlaneTree& b);

bool is_right_vine(const PlaneTree& t);
PlaneTree right_vine(int leaves, int arity);
int right_leaf_count(const PlaneTree& t);

nlohmann::json tree_to_json(const PlaneTree& t);
PlaneTree tree_from_json(const nlohmann::json& j);

}  // namespace otl
