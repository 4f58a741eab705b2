#include <doctest.h>

#include <set>

#include "otl/error.hpp"
#include "otl/invariants.hpp"
#include "otl/positivize.hpp"
#include "support.hpp"

using namespace otl;

TEST_SUITE("fixtures") {

TEST_CASE("corpus shape") {
  const auto& corpus = examples_corpus();
  CHECK(corpus.size() >= 8);
  std::set<std::string> names;
  for (const auto& f : corpus) {
    CHECK(names.insert(f.name).second);
    const GroupElement g = fixture_element(f);
    CHECK(is_oriented_positive(g));
    CHECK(!f.note.empty());
  }
  for (const char* name : {"trefoil", "hopf", "twist-0", "twist-1", "twist-2", "7_4", "granny", "annulus-1",
                           "annulus-2", "pretzel", "chain-2", "chain-3"})
    CHECK_NOTHROW(find_example(name));
  CHECK_THROWS_AS(find_example("nonesuch"), Error);
}

TEST_CASE("pretzel literal leaf count") {
  const ExampleFixture& f = find_example("pretzel");
  CHECK(f.input_kind == "btree");
  const GroupElement g = fixture_element(f);
  CHECK(parse_tree(f.input, 2).leaf_count() == 51);
  // alpha keeps leaf counts; the reduced binary pair may lose a caret.
  CHECK(alpha_inverse(g).leaf_count() == 51);
  CHECK(alpha(alpha_inverse(g)) == g);
}

TEST_CASE("reference generators") {
  // Independent checks of the generators against textbook Jones polynomials.
  CHECK(to_t_string(jones(braid_closure({1, 1, 1, 2, -1, 2}, 3))) == "-t^6 + t^5 - t^4 + 2t^3 - t^2 + t");
  const LinkDiagram t34 = braid_closure({1, 2, 1, 2, 1, 2, 1, 2}, 3);
  // P(3,3,-2) is the (3,4) torus knot; a knot's Jones polynomial ignores the orientation.
  CHECK(jones_any(pretzel({3, 3, -2})) == jones(t34));
  const LinkDiagram tw = antiparallel_twist(2);
  CHECK(tw.crossing_count() == 4);
  CHECK(negative_crossings(tw) == 0);
  CHECK(components(tw) == 2);
}

TEST_CASE("families are generated") {
  for (int n = 0; n <= 3; ++n) {
    CHECK(twist_tree(n).arity() == 3);
    CHECK(annulus_tree(n + 1).arity() == 3);
  }
  CHECK(twist_tree(2).leaf_count() > twist_tree(1).leaf_count());
}

TEST_CASE("twist tree t_1 positivizes to five crossings") {
  const GroupElement g = alpha(positive_element(twist_tree(1)));
  const LinkDiagram d = strip_trivial(positivize(g)).first;
  CHECK(d.crossing_count() == 5);
  CHECK(negative_crossings(d) == 0);
  CHECK(jones(d) == jones(find_example("twist-1").reference()));
}

TEST_CASE("every example passes") {
  for (const auto& f : examples_corpus()) {
    const ExampleOutcome r = run_example(f);
    INFO(f.name << ": " << r.detail);
    CHECK(r.pass);
    if (f.expected_components >= 0) CHECK(r.components == f.expected_components);
  }
}

TEST_CASE("input kinds") {
  const GroupElement w = element_from_input("word", "x0 x1");
  CHECK(element_from_input("btree", print_tree(w.top()) + ";" + print_tree(w.bottom())) == w);
  CHECK(element_from_input("ttree", "(***)") == alpha(positive_element(parse_tree("(***)", 3))));
  CHECK_THROWS_AS(element_from_input("btree", "(**"), Error);
}

}  // TEST_SUITE
