#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "otl/trees.hpp"

namespace otl {

// Element of F (arity 2) or F3 (arity 3) as a reduced tree pair.
class GroupElement {
 public:
  explicit GroupElement(int arity = 2);
  // Reduces the pair; leaf counts and arities must agree.
  GroupElement(PlaneTree top, PlaneTree bottom);

  const PlaneTree& top() const { return top_; }
  const PlaneTree& bottom() const { return bottom_; }
  int arity() const { return top_.arity(); }
  int leaf_count() const { return top_.leaf_count(); }
  bool is_identity() const { return top_.is_leaf(); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.top_ == b.top_ && a.bottom_ == b.bottom_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

 private:
  PlaneTree top_;
  PlaneTree bottom_;
};

struct Letter {
  int index = 0;
  int exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

Word parse_word(std::string_view text);
std::string print_word(const Word& w);

// Cancels opposing carets until none remain.
std::pair<PlaneTree, PlaneTree> reduce_pair(const PlaneTree& top, const PlaneTree& bottom);

GroupElement identity(int arity = 2);
GroupElement generator(int n);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, int e);
GroupElement shift(const GroupElement& g, int times = 1);
GroupElement evaluate_word(const Word& w);
inline GroupElement operator*(const GroupElement& a, const GroupElement& b) { return multiply(a, b); }

bool is_positive(const GroupElement& g);

// Node-wise (A,B,C) -> (A',(B',C')).
PlaneTree alpha_tree(const PlaneTree& t3);
GroupElement alpha(const GroupElement& g3);
GroupElement alpha_inverse(const GroupElement& g2);
bool is_oriented_positive(const GroupElement& g);

nlohmann::json element_to_json(const GroupElement& g);
GroupElement element_from_json(const nlohmann::json& j);

}  // namespace otl
