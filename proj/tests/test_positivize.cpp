#include <doctest.h>

#include "otl/error.hpp"
#include "otl/invariants.hpp"
#include "otl/positivize.hpp"
#include "support.hpp"

using namespace otl;

TEST_SUITE("positivize") {

TEST_CASE("leaf classes") {
  const auto info = classify_leaves(parse_tree("(*(***)*)", 3));
  REQUIRE(info.size() == 5);
  CHECK(info[0].cls == LeafClass::Left);
  CHECK(info[1].cls == LeafClass::Left);
  CHECK(info[2].cls == LeafClass::Middle);
  CHECK(info[3].cls == LeafClass::Right);
  CHECK(info[4].cls == LeafClass::Right);
  CHECK(info[4].rightmost);
  CHECK_FALSE(info[3].rightmost);
  CHECK(std::string(leaf_class_name(LeafClass::Middle)) == "MIDDLE");
  CHECK_THROWS_AS(classify_leaves(PlaneTree(3)), Error);
}

TEST_CASE("trefoil element") {
  const GroupElement g = evaluate_word(parse_word("x0 x1"));
  const PositivizeResult r = positivize_traced(g);
  CHECK(negative_crossings(r.diagram) == 0);
  CHECK(equal_up_to_unknots(r.diagram, r.raw));
  CHECK(right_leaf_bound(g) == 2);
  const auto j = positivize_to_json(r);
  CHECK(j.contains("moves"));
  CHECK(j["rightLeafBound"] == 2);
}

TEST_CASE("rejects elements outside the positive oriented monoid") {
  CHECK_THROWS_AS(positivize(inverse(generator(0) * generator(1))), Error);
  CHECK_THROWS_AS(positivize(generator(0)), Error);
}

TEST_CASE("random positive oriented elements") {
  std::mt19937 rng(51);
  for (int it = 0; it < 150; ++it) {
    const GroupElement g = test::random_oriented_positive(rng, 6);
    const PositivizeResult r = positivize_traced(g);
    CHECK(writhe(r.raw) == 0);
    CHECK(negative_crossings(r.diagram) == 0);
    CHECK(writhe(r.diagram) == r.diagram.crossing_count());
    CHECK(equal_up_to_unknots(r.diagram, r.raw));
    CHECK(strip_trivial(r.diagram).first.crossing_count() <= right_leaf_bound(g));
  }
}

TEST_CASE("move order does not matter") {
  std::mt19937 rng(52);
  PositivizeOptions backwards;
  backwards.right_to_left = true;
  for (int it = 0; it < 80; ++it) {
    const GroupElement g = test::random_oriented_positive(rng, 8);
    const LinkDiagram a = positivize(g);
    const LinkDiagram b = positivize(g, backwards);
    CHECK(components(a) == components(b));
    CHECK(jones(a) == jones(b));
  }
}

}  // TEST_SUITE
