#include <doctest.h>

#include "otl/error.hpp"
#include "support.hpp"

using namespace otl;

TEST_SUITE("trees") {

TEST_CASE("parse and print fixed literals") {
  CHECK(print_tree(parse_tree("*", 2)) == "*");
  CHECK(print_tree(parse_tree(" ( * ( * * ) ) ", 2)) == "(*(**))");
  const PlaneTree t = parse_tree("(*(***)*)", 3);
  CHECK(t.leaf_count() == 5);
  CHECK(t.internal_count() == 2);
  CHECK_THROWS_AS(parse_tree("(***)", 2), Error);
  CHECK_THROWS_AS(parse_tree("(**", 2), Error);
  CHECK_THROWS_AS(parse_tree("(**)x", 2), Error);
}

TEST_CASE("round trip on random trees") {
  std::mt19937 rng(1);
  for (int it = 0; it < 200; ++it) {
    const int arity = test::uniform(rng, 2, 3);
    const PlaneTree t = test::random_tree(rng, arity, test::uniform(rng, 0, 20));
    CHECK(parse_tree(print_tree(t), arity) == t);
    CHECK(tree_from_json(tree_to_json(t)) == t);
  }
}

TEST_CASE("leaf and node counts") {
  std::mt19937 rng(2);
  for (int it = 0; it < 200; ++it) {
    const int arity = test::uniform(rng, 2, 3);
    const PlaneTree t = test::random_tree(rng, arity, test::uniform(rng, 0, 15));
    const PlaneTree s = test::random_tree(rng, arity, test::uniform(rng, 0, 5));
    const int leaf = test::uniform(rng, 0, t.leaf_count() - 1);
    CHECK(leaf_count(graft(t, leaf, s)) == leaf_count(t) + leaf_count(s) - 1);
    CHECK((arity - 1) * t.internal_count() + 1 == t.leaf_count());
  }
}

TEST_CASE("left spans are laminar") {
  std::mt19937 rng(3);
  for (int it = 0; it < 100; ++it) {
    const PlaneTree t = test::random_tree(rng, test::uniform(rng, 2, 3), test::uniform(rng, 1, 15));
    std::vector<std::pair<int, int>> spans;
    for (const auto& n : preorder(t))
      if (!n.leaf) spans.push_back(left_span(t, n.id));
    for (const auto& a : spans)
      for (const auto& b : spans) {
        const bool disjoint = a.second < b.first || b.second < a.first;
        const bool nested = (a.first <= b.first && b.second <= a.second) || (b.first <= a.first && a.second <= b.second);
        CHECK((disjoint || nested));
      }
  }
}

TEST_CASE("right vines and right leaves") {
  CHECK(print_tree(right_vine(4, 2)) == "(*(*(**)))");
  CHECK(print_tree(right_vine(5, 3)) == "(**(***))");
  CHECK(is_right_vine(right_vine(7, 3)));
  CHECK_FALSE(is_right_vine(parse_tree("((**)*)", 2)));
  CHECK(right_leaf_count(parse_tree("(*(***)*)", 3)) == 2);
}

TEST_CASE("subtree replacement and refinement") {
  const PlaneTree t = parse_tree("((**)(**))", 2);
  CHECK(print_tree(subtree(t, 4)) == "(**)");
  CHECK(print_tree(replace_subtree(t, 1, PlaneTree(2))) == "(*(**))");
  const PlaneTree a = parse_tree("((**)*)", 2);
  const PlaneTree b = parse_tree("(*(**))", 2);
  CHECK(print_tree(common_refinement(a, b)) == "((**)(**))");
  const auto pieces = refinement_pieces(a, common_refinement(a, b));
  REQUIRE(pieces.size() == 3);
  CHECK(print_tree(pieces[2]) == "(**)");
  CHECK(graft_all(a, pieces) == common_refinement(a, b));
}

}  // TEST_SUITE
