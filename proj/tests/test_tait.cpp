#include <doctest.h>

#include <algorithm>

#include "otl/error.hpp"
#include "otl/invariants.hpp"
#include "support.hpp"

using namespace otl;

namespace {

std::vector<std::pair<int, int>> edges_of_sign(const SignedTaitGraph& g, int sign) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges)
    if (e.sign == sign) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(out.begin(), out.end());
  return out;
}

// Proper 2-coloring of every connected piece, lowest vertex of each piece +. Reversing a whole
// split piece keeps the Jones polynomial, so any such choice orients the link consistently.
SignedTaitGraph color_pieces(SignedTaitGraph g) {
  std::vector<int> col(static_cast<std::size_t>(g.n), 0);
  for (int s = 0; s < g.n; ++s) {
    if (col[s]) continue;
    col[s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& e : g.edges) {
        if (e.u != x && e.v != x) continue;
        const int y = e.u == x ? e.v : e.u;
        if (!col[y]) {
          col[y] = -col[x];
          stack.push_back(y);
        }
      }
    }
  }
  g.coloring = col;
  return g;
}

}  // namespace

TEST_SUITE("tait") {

TEST_CASE("graph of x0 x1") {
  const SignedTaitGraph g = canonical_coloring(tait_graph(generator(0) * generator(1)));
  CHECK(g.n == 4);
  CHECK(edges_of_sign(g, 1) == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(edges_of_sign(g, -1) == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(*g.coloring == std::vector<int>{1, -1, 1, -1});
}

TEST_CASE("membership by bipartiteness") {
  CHECK_FALSE(is_bipartite(tait_graph(generator(0))));
  CHECK_FALSE(is_bipartite(tait_graph(generator(0) * generator(0))));
  CHECK(is_bipartite(tait_graph(generator(0) * generator(1))));
  CHECK_THROWS_AS(canonical_coloring(tait_graph(generator(0))), Error);
  std::mt19937 rng(21);
  for (int it = 0; it < 200; ++it) CHECK(is_bipartite(tait_graph(test::random_oriented_product(rng, 8))));
}

TEST_CASE("edge counts, laminarity, embedding") {
  std::mt19937 rng(22);
  for (int it = 0; it < 150; ++it) {
    const GroupElement g = evaluate_word(test::random_word(rng, 8, 6));
    const SignedTaitGraph graph = tait_graph(g);
    const int n = g.leaf_count();
    CHECK(graph.n == n);
    CHECK(static_cast<int>(edges_of_sign(graph, 1).size()) == n - 1);
    CHECK(static_cast<int>(edges_of_sign(graph, -1).size()) == n - 1);
    CHECK(is_laminar(graph.edges, 1));
    CHECK(is_laminar(graph.edges, -1));
    CHECK(is_connected(graph));
    CHECK(is_plane_embedding(graph));
    CHECK(graph_from_json(graph_to_json(graph)).edges == graph.edges);
  }
}

TEST_CASE("non-laminar arcs are rejected") {
  CHECK_THROWS_AS(line_graph(4, {{0, 2, 1, 0}, {1, 3, 1, 1}}), Error);
  CHECK_NOTHROW(line_graph(4, {{0, 2, 1, 0}, {1, 3, -1, 1}}));
}

TEST_CASE("exactly two colorings") {
  std::mt19937 rng(23);
  for (int it = 0; it < 100; ++it) {
    const SignedTaitGraph g = canonical_coloring(tait_graph(test::random_oriented_product(rng, 6)));
    const auto& col = *g.coloring;
    CHECK(col[0] == 1);
    for (const auto& e : g.edges) CHECK(col[e.u] != col[e.v]);
    // Flipping every vertex is the only other proper coloring: vertex 0 forces the rest on a connected graph.
    std::vector<int> flipped(col);
    for (int& c : flipped) c = -c;
    for (const auto& e : g.edges) CHECK(flipped[e.u] != flipped[e.v]);
    CHECK(is_connected(g));
  }
}

TEST_CASE("reidemeister graph moves keep bipartiteness and the link") {
  std::mt19937 rng(24);
  int moved = 0;
  for (int it = 0; it < 120; ++it) {
    const GroupElement g = test::random_oriented_product(rng, 5);
    if (g.leaf_count() > 12) continue;
    const SignedTaitGraph before = canonical_coloring(tait_graph(g));
    const ReideResult r = reide_moves(before);
    moved += static_cast<int>(r.log.size());
    REQUIRE(is_bipartite(r.graph));
    const SignedTaitGraph after = color_pieces(r.graph);
    const LinkDiagram d1 = orient(build_diagram(before), before);
    const LinkDiagram d2 = orient(build_diagram(after), after);
    CHECK(equal_up_to_unknots(d1, d2));
  }
  CHECK(moved > 0);
}

TEST_CASE("emitters") {
  const SignedTaitGraph g = canonical_coloring(tait_graph(generator(0) * generator(1)));
  CHECK(to_dot(g).rfind("graph Gamma {", 0) == 0);
  CHECK(to_svg(g).find("<svg") != std::string::npos);
}

}  // TEST_SUITE
