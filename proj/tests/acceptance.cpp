// One line per acceptance criterion; exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "otl/cli.hpp"
#include "otl/invariants.hpp"
#include "otl/positivize.hpp"
#include "otl/reduce.hpp"
#include "support.hpp"

using namespace otl;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

bool report(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool fast = s < limit_s;
  const bool pass = o.ok && fast;
  std::string why = o.detail;
  if (o.ok && !fast) why = "over time limit";
  std::printf("criterion %d %s: %s (%.3f s, limit %g s)%s%s\n", id, title, pass ? "PASS" : "FAIL", s, limit_s,
              why.empty() ? "" : ": ", why.c_str());
  std::fflush(stdout);
  return pass;
}

void gamma_fidelity(Outcome& o) {
  std::ostringstream out, err;
  o.require(run_cli({"gamma", "x0 x1", "--format", "json"}, out, err) == 0, "gamma command failed");
  const auto j = nlohmann::json::parse(out.str());
  std::multiset<std::pair<int, int>> plus, minus;
  for (const auto& e : j["edges"]) (e[2] == 1 ? plus : minus).insert({e[0].get<int>(), e[1].get<int>()});
  o.require(j["n"] == 4, "vertex count");
  o.require(plus == std::multiset<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 3}}, "positive edges");
  o.require(minus == std::multiset<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}}, "negative edges");
  o.require(j["coloring"] == nlohmann::json({"+", "-", "+", "-"}), "coloring");
}

void membership(Outcome& o) {
  o.require(!is_bipartite(tait_graph(generator(0))), "x0 accepted");
  o.require(is_bipartite(tait_graph(generator(0) * generator(1))), "x0 x1 rejected");
  std::mt19937 rng(2024);
  for (int it = 0; it < 500; ++it)
    o.require(is_bipartite(tait_graph(test::random_oriented_product(rng, 10))), "random product rejected");
}

void twist_one(Outcome& o) {
  const GroupElement g = alpha(positive_element(twist_tree(1)));
  const LinkDiagram d = strip_trivial(positivize(g)).first;
  o.require(negative_crossings(d) == 0, "negative crossing left");
  o.require(d.crossing_count() == 5, "crossing count " + std::to_string(d.crossing_count()));
  o.require(jones(d) == jones(find_example("twist-1").reference()), "Jones differs from the 5_2 fixture");
}

void example_identities(Outcome& o) {
  for (const char* name : {"trefoil", "hopf", "granny", "twist-0", "twist-1", "annulus-1", "annulus-2", "7_4", "pretzel"}) {
    const ExampleOutcome r = run_example(find_example(name));
    o.require(r.pass, std::string(name) + ": " + r.detail);
  }
}

void positivize_suite(Outcome& o) {
  std::mt19937 rng(300);
  for (int it = 0; it < 300; ++it) {
    // At most 13 ternary leaves: six internal nodes.
    const GroupElement g = test::random_oriented_positive(rng, 6);
    const PositivizeResult r = positivize_traced(g);
    const std::string tag = " for " + print_tree(r.ternary_top);
    o.require(writhe(r.raw) == 0, "raw writhe" + tag);
    o.require(negative_crossings(r.diagram) == 0, "negative crossing" + tag);
    o.require(equal_up_to_unknots(r.diagram, r.raw), "Jones changed" + tag);
    o.require(strip_trivial(r.diagram).first.crossing_count() <= right_leaf_bound(g), "crossing bound" + tag);
  }
}

void unknotting(Outcome& o) {
  for (int n = 1; n <= 4; ++n)
    o.require(unknotting_bound(chain_element(n)).bound == n, "chain-" + std::to_string(n) + " bound");
  std::mt19937 rng(200);
  for (int it = 0; it < 200; ++it) {
    const ReductionTrace tr = reduce_tree(test::random_tree(rng, 3, test::uniform(rng, 2, 7)));
    for (std::size_t k = 0; k < tr.steps.size(); ++k) {
      if (tr.steps[k].pattern == 6) continue;
      const LinkDiagram a = diagram_of(alpha(positive_element(tr.trees[k])));
      const LinkDiagram b = diagram_of(alpha(positive_element(tr.trees[k + 1])));
      o.require(equal_up_to_unknots(a, b), "pattern " + std::to_string(tr.steps[k].pattern) + " changed the link");
    }
  }
}

void bracket_engine(Outcome& o) {
  std::mt19937 rng(18);
  auto check = [&](const LinkDiagram& d, const std::string& tag) {
    o.require(bracket(d) == bracket_naive(d), "sweep differs from state sum on " + tag);
    if (d.crossing_count() == 0) return;
    const int c = test::uniform(rng, 0, d.crossing_count() - 1);
    const LaurentPoly rhs = LaurentPoly::monomial(1, 1) * bracket(test::smooth(d, c, true)) +
                            LaurentPoly::monomial(1, -1) * bracket(test::smooth(d, c, false));
    o.require(bracket(d) == rhs, "skein fails on " + tag);
  };
  for (const auto& f : examples_corpus()) {
    const LinkDiagram raw = diagram_of(fixture_element(f));
    if (raw.crossing_count() <= 18) check(raw, f.name);
    if (f.reference) {
      const LinkDiagram ref = f.reference();
      if (ref.crossing_count() <= 18) check(ref, f.name + " reference");
    }
  }
  for (int it = 0; it < 200; ++it) {
    const LinkDiagram d = it % 2 ? test::random_braid_diagram(rng, test::uniform(rng, 2, 5), test::uniform(rng, 1, 18))
                                 : diagram_of(test::random_oriented_product(rng, 4));
    if (d.crossing_count() > 18) {
      --it;
      continue;
    }
    check(d, "random diagram " + std::to_string(it));
  }
}

void algebra(Outcome& o) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k < n; ++k)
      o.require(generator(n) * generator(k) == generator(k) * generator(n + 1), "relation fails");
  std::mt19937 rng(8);
  for (int it = 0; it < 200; ++it) {
    const GroupElement a = test::random_ternary_element(rng, 6);
    const GroupElement b = test::random_ternary_element(rng, 6);
    o.require(alpha(a * b) == alpha(a) * alpha(b), "alpha is not multiplicative");
  }
  for (int it = 0; it < 200; ++it) {
    const GroupElement h = test::random_ternary_element(rng, 6);
    o.require(is_oriented_positive(alpha(h)) == is_positive(h), "image of ternary element misclassified");
  }
  // Positive words filtered by bipartiteness, so the sample is not built from alpha.
  int sampled = 0;
  for (int attempt = 0; attempt < 200000 && sampled < 200; ++attempt) {
    const GroupElement g = evaluate_word(test::random_word(rng, 8, 6, true));
    if (g.is_identity() || !is_oriented_positive(g)) continue;
    ++sampled;
    o.require(is_positive(alpha_inverse(g)), "preimage of positive oriented element is not positive");
  }
  o.require(sampled == 200, "only " + std::to_string(sampled) + " positive oriented samples found");
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "gamma of x0 x1", 0.001, gamma_fidelity);
  all &= report(2, "oriented membership", 1.0, membership);
  all &= report(3, "twist tree t_1 positivizes to 5_2", 5.0, twist_one);
  all &= report(4, "example identities", 60.0, example_identities);
  all &= report(5, "positivization property suite", 180.0, positivize_suite);
  all &= report(6, "unknotting bound and reduction moves", 120.0, unknotting);
  all &= report(7, "bracket engine self-consistency", 120.0, bracket_engine);
  all &= report(8, "algebra", 60.0, algebra);
  return all ? 0 : 1;
}
