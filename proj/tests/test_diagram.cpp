#include <doctest.h>

#include <algorithm>

#include "otl/error.hpp"
#include "otl/invariants.hpp"
#include "support.hpp"

using namespace otl;

TEST_SUITE("diagram") {

TEST_CASE("crossing count, validity, writhe of oriented diagrams") {
  std::mt19937 rng(31);
  for (int it = 0; it < 150; ++it) {
    const GroupElement g = test::random_oriented_product(rng, 6);
    const LinkDiagram d = diagram_of(g);
    CHECK(d.crossing_count() == 2 * (g.leaf_count() - 1));
    CHECK(d.oriented);
    CHECK_NOTHROW(validate(d));
  }
  CHECK_THROWS_AS(diagram_of(generator(0)), Error);
}

TEST_CASE("raw diagram of any tree pair has 2(n-1) crossings") {
  std::mt19937 rng(32);
  for (int it = 0; it < 100; ++it) {
    const GroupElement g = evaluate_word(test::random_word(rng, 8, 6));
    const LinkDiagram d = build_diagram(tait_graph(g));
    CHECK(d.crossing_count() == 2 * (g.leaf_count() - 1));
    CHECK_NOTHROW(validate(d));
  }
}

TEST_CASE("reversing the coloring keeps every crossing sign") {
  std::mt19937 rng(33);
  for (int it = 0; it < 100; ++it) {
    const SignedTaitGraph g = canonical_coloring(tait_graph(test::random_oriented_product(rng, 6)));
    SignedTaitGraph flipped = g;
    for (int& c : *flipped.coloring) c = -c;
    const LinkDiagram raw = build_diagram(g);
    const LinkDiagram a = orient(raw, g);
    const LinkDiagram b = orient(raw, flipped);
    CHECK(crossing_signs(a) == crossing_signs(b));
    CHECK(print_pd(to_pd(reverse(a))) == print_pd(to_pd(b)));
  }
}

TEST_CASE("positive elements have writhe zero before simplification") {
  std::mt19937 rng(34);
  for (int it = 0; it < 100; ++it) CHECK(writhe(diagram_of(test::random_oriented_positive(rng, 6))) == 0);
}

TEST_CASE("simplify keeps the Jones polynomial") {
  std::mt19937 rng(35);
  SimplifyOptions opt;
  opt.verify = true;
  for (int it = 0; it < 80; ++it) {
    const LinkDiagram d = diagram_of(test::random_oriented_product(rng, 5));
    std::vector<MoveRecord> log;
    const LinkDiagram s = simplify(d, &log, opt);
    CHECK(s.crossing_count() <= d.crossing_count());
    CHECK(components(s) == components(d));
    CHECK(jones(s) == jones(d));
  }
}

TEST_CASE("reidemeister moves on small diagrams") {
  // sigma1 sigma1^-1 closes to a two-component unlink after one R2.
  LinkDiagram d = braid_closure({1, -1}, 2);
  REQUIRE(d.crossing_count() == 2);
  CHECK(apply_r2(d, 0, 1));
  CHECK(d.crossing_count() == 0);
  CHECK(d.loops == 2);
  // A one-crossing unknot is nugatory.
  LinkDiagram k = braid_closure({1}, 2);
  CHECK(is_nugatory(k, 0));
  bool curl = false;
  CHECK(apply_nugatory(k, 0, &curl));
  CHECK(k.crossing_count() == 0);
  CHECK(components(k) == 1);
}

TEST_CASE("PD round trip") {
  std::mt19937 rng(36);
  for (int it = 0; it < 60; ++it) {
    const LinkDiagram d = it % 2 ? diagram_of(test::random_oriented_product(rng, 4)) : test::random_braid_diagram(rng, 4, 8);
    const PDCode pd = to_pd(d);
    const LinkDiagram back = from_pd(parse_pd(print_pd(pd)));
    CHECK(components(back) == components(d));
    CHECK(bracket(back) == bracket(d));
    CHECK(crossing_signs(back).size() == crossing_signs(d).size());
    CHECK(writhe(back) == writhe(d));
  }
  CHECK_THROWS_AS(parse_pd("X[1,2,3"), Error);
}

TEST_CASE("component traversal and unions") {
  const LinkDiagram hopf = braid_closure({1, 1}, 2);
  CHECK(components(hopf) == 2);
  CHECK(component_traversals(hopf).size() == 2);
  const LinkDiagram u = disjoint_union(hopf, braid_closure({1, 1, 1}, 2));
  CHECK(components(u) == 3);
  CHECK(u.crossing_count() == 5);
  LinkDiagram with_loop = hopf;
  with_loop.loops = 2;
  auto [stripped, removed] = strip_trivial(with_loop);
  CHECK(removed == 2);
  CHECK(stripped.crossing_count() == 2);
  CHECK(writhe(mirror(hopf)) == -2);
  CHECK(writhe(reverse(hopf)) == 2);
}

}  // TEST_SUITE
