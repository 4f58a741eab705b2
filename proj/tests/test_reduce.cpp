#include <doctest.h>

#include "otl/error.hpp"
#include "otl/invariants.hpp"
#include "otl/reduce.hpp"
#include "support.hpp"

using namespace otl;

namespace {

LinkDiagram link_of(const PlaneTree& t3) { return diagram_of(alpha(positive_element(t3))); }

}  // namespace

TEST_SUITE("reduce") {

TEST_CASE("pattern table") {
  CHECK_FALSE(match_pattern(parse_tree("(***)", 3)).has_value());
  CHECK_FALSE(match_pattern(PlaneTree(3)).has_value());
  CHECK(match_pattern(parse_tree("((***)**)", 3))->pattern == 1);
  CHECK(match_pattern(parse_tree("(*(***)*)", 3))->pattern == 2);
  CHECK(match_pattern(parse_tree("(**(***))", 3))->pattern == 3);
  CHECK(match_pattern(parse_tree("(*(***)(***))", 3))->pattern == 4);
  CHECK(match_pattern(parse_tree("((***)*(***))", 3))->pattern == 5);
  CHECK(match_pattern(parse_tree("((***)(***)*)", 3))->pattern == 6);
  CHECK(match_pattern(parse_tree("((***)(***)(***))", 3))->pattern == 7);
}

TEST_CASE("moves") {
  const PlaneTree seven = parse_tree("((***)(***)(***))", 3);
  auto [t7, s7] = apply_move(seven, 0, 7);
  CHECK(print_tree(t7) == "(***)");
  CHECK(s7.leaves_removed == 6);
  CHECK(s7.cost == 0);
  auto [t6, s6] = apply_move(parse_tree("((***)(***)*)", 3), 0, 6);
  CHECK(t6.is_leaf());
  CHECK(s6.leaves_removed == 6);
  CHECK(s6.cost == 1);
  auto [t1, s1] = apply_move(parse_tree("(((***)**)**)", 3), 1, 1);
  CHECK(print_tree(t1) == "((***)**)");
  CHECK(s1.leaves_removed == 2);
  CHECK_THROWS_AS(apply_move(seven, 0, 6), Error);
  CHECK_THROWS_AS(apply_move(seven, 1, 1), Error);
}

TEST_CASE("deepest match wins") {
  const PlaneTree t = parse_tree("((***)((***)**)*)", 3);
  const auto m = match_pattern(t);
  REQUIRE(m.has_value());
  CHECK(m->pattern == 1);
  CHECK(preorder(t)[m->node].depth == 1);
}

TEST_CASE("identity and chain bounds") {
  CHECK(unknotting_bound(identity()).bound == 0);
  CHECK(unknotting_bound(identity()).steps.empty());
  for (int n = 1; n <= 4; ++n) CHECK(unknotting_bound(chain_element(n)).bound == n);
  CHECK(min_bound_over_orders(alpha_inverse(chain_element(2)).top()) == 2);
  CHECK_THROWS_AS(unknotting_bound(generator(0)), Error);
  CHECK_THROWS_AS(min_bound_over_orders(right_vine(17, 3)), Error);
}

TEST_CASE("termination and coverage") {
  std::mt19937 rng(61);
  for (int it = 0; it < 500; ++it) {
    const PlaneTree t = test::random_tree(rng, 3, test::uniform(rng, 0, 12));
    if (t.internal_count() >= 2) CHECK(match_pattern(t).has_value());
    const ReductionTrace tr = reduce_tree(t);
    CHECK(static_cast<int>(tr.steps.size()) <= t.leaf_count());
    for (std::size_t k = 0; k < tr.steps.size(); ++k) {
      CHECK(tr.trees[k + 1].leaf_count() < tr.trees[k].leaf_count());
      CHECK(tr.trees[k].leaf_count() - tr.trees[k + 1].leaf_count() == tr.steps[k].leaves_removed);
      CHECK((tr.steps[k].cost == 1) == (tr.steps[k].pattern == 6));
    }
  }
}

TEST_CASE("moves other than the sixth keep the link") {
  std::mt19937 rng(62);
  for (int it = 0; it < 60; ++it) {
    const ReductionTrace tr = reduce_tree(test::random_tree(rng, 3, test::uniform(rng, 2, 8)));
    for (std::size_t k = 0; k < tr.steps.size(); ++k)
      if (tr.steps[k].pattern != 6) CHECK(equal_up_to_unknots(link_of(tr.trees[k]), link_of(tr.trees[k + 1])));
  }
}

TEST_CASE("a sixth move on a chain undoes one clasp") {
  for (int n = 1; n <= 3; ++n) {
    const ReductionTrace tr = unknotting_bound(chain_element(n));
    std::size_t k = 0;
    while (tr.steps[k].pattern != 6) ++k;
    // The chain loses one Hopf clasp: compare with the next smaller chain.
    const LinkDiagram after = link_of(tr.trees[k + 1]);
    const LinkDiagram smaller = n == 1 ? braid_closure({}, 2) : diagram_of(chain_element(n - 1));
    CHECK(equal_up_to_unknots(after, smaller));
  }
}

TEST_CASE("smoothing move") {
  const PlaneTree t = parse_tree("((***)(***)*)", 3);
  // alpha keeps the leaf count, so n = 7 and the result has n - 5 leaves.
  CHECK(alpha_tree(t).leaf_count() == 7);
  const SmoothingResult r = apply_smoothing_move(t, 0);
  CHECK(r.top.leaf_count() == 2);
  CHECK(is_right_vine(r.bottom));
  CHECK(r.bottom.leaf_count() == 2);
  CHECK_THROWS_AS(apply_smoothing_move(t, 1), Error);
  CHECK_THROWS_AS(apply_smoothing_move(parse_tree("((***)**)", 3), 0), Error);
}

// p = +-A^k q, after matching extra unknot factors.
bool same_up_to_unit(LaurentPoly p, LaurentPoly q, int extra_unknots) {
  for (int k = 0; k < extra_unknots; ++k) q *= loop_value();
  for (int k = 0; k < -extra_unknots; ++k) p *= loop_value();
  if (p.is_zero() || q.is_zero()) return p == q;
  const LaurentPoly s = q.shifted(p.low() - q.low());
  return p == s || p == -s;
}

TEST_CASE("smoothing a chain clasp merges two components") {
  // Smoothing one crossing of a Hopf clasp joins its two unknots: chain-n becomes chain-(n-1)
  // with n components, and the Hopf link becomes an unknot. The raw diagrams also differ by
  // split unknots from the removed leaves, so nontrivial parts are compared after stripping.
  for (int n = 1; n <= 3; ++n) {
    const PlaneTree t = alpha_inverse(chain_element(n)).top();
    const LinkDiagram before = strip_trivial(diagram_of(chain_element(n))).first;
    const LinkDiagram expected = n == 1 ? braid_closure({}, 1) : diagram_of(chain_element(n - 1));
    const LinkDiagram expected_stripped = strip_trivial(expected).first;
    int seen = 0;
    for (const auto& m : all_matches(t)) {
      if (m.pattern != 6) continue;
      ++seen;
      const SmoothingResult r = apply_smoothing_move(t, m.node);
      const LinkDiagram after = strip_trivial(build_diagram(tait_graph(r.top, r.bottom))).first;
      if (n > 1) CHECK(components(before) - components(after) == 1);
      CHECK(components(after) == components(expected_stripped));
      CHECK(same_up_to_unit(bracket(after), bracket(expected_stripped), 0));
    }
    CHECK(seen == n);
  }
}

TEST_CASE("trace JSON") {
  const auto j = trace_to_json(unknotting_bound(chain_element(2)));
  CHECK(j["bound"] == 2);
  CHECK(j["steps"].size() >= 2);
  CHECK(j["steps"][0].contains("before"));
}

}  // TEST_SUITE
