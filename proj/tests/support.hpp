#pragma once

#include <random>
#include <vector>

#include "otl/diagram.hpp"
#include "otl/fixtures.hpp"
#include "otl/thompson.hpp"
#include "otl/trees.hpp"

namespace otl::test {

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Grows a tree by grafting carets onto uniformly chosen leaves.
inline PlaneTree random_tree(std::mt19937& rng, int arity, int internals) {
  PlaneTree t(arity);
  for (int k = 0; k < internals; ++k) t = graft(t, uniform(rng, 0, t.leaf_count() - 1), PlaneTree::caret(arity));
  return t;
}

inline Word random_word(std::mt19937& rng, int max_len, int max_index, bool positive = false) {
  Word w;
  const int len = uniform(rng, 0, max_len);
  for (int k = 0; k < len; ++k) {
    const int e = positive ? uniform(rng, 1, 3) : (uniform(rng, 0, 1) ? 1 : -1) * uniform(rng, 1, 2);
    w.push_back({uniform(rng, 0, max_index), e});
  }
  return w;
}

inline GroupElement random_ternary_element(std::mt19937& rng, int max_internals) {
  const int k = uniform(rng, 0, max_internals);
  return GroupElement(random_tree(rng, 3, k), random_tree(rng, 3, k));
}

// Oriented positive element alpha(T, vine) from a random ternary top tree.
inline GroupElement random_oriented_positive(std::mt19937& rng, int max_internals) {
  return alpha(positive_element(random_tree(rng, 3, uniform(rng, 1, max_internals))));
}

// Product of the oriented generators x_i x_{i+1} (i <= 2) and their inverses.
inline GroupElement random_oriented_product(std::mt19937& rng, int max_len) {
  GroupElement g = identity();
  const int len = uniform(rng, 1, max_len);
  for (int k = 0; k < len; ++k) {
    const int i = uniform(rng, 0, 2);
    GroupElement f = generator(i) * generator(i + 1);
    g = g * (uniform(rng, 0, 1) ? f : inverse(f));
  }
  return g;
}

// Braid closure with random letters on `strands` strands.
inline LinkDiagram random_braid_diagram(std::mt19937& rng, int strands, int length) {
  std::vector<int> word;
  for (int k = 0; k < length; ++k) word.push_back((uniform(rng, 0, 1) ? 1 : -1) * uniform(rng, 1, strands - 1));
  return braid_closure(word, strands);
}

// Diagram with crossing `c` smoothed: slot pairs (0,1),(2,3) for the A smoothing, (0,3),(1,2)
// for the B smoothing. Built by dart surgery, independent of the bracket code.
inline LinkDiagram smooth(const LinkDiagram& d, int c, bool a_smoothing) {
  const int n = d.crossing_count();
  auto partner = [&](int x) {
    const int s = dart_slot(x);
    const int t = a_smoothing ? (s ^ 1) : (3 - s);
    return dart(c, t);
  };
  auto renum = [&](int x) { return dart(dart_crossing(x) < c ? dart_crossing(x) : dart_crossing(x) - 1, dart_slot(x)); };
  std::vector<RawCrossing> raw;
  for (int k = 0; k < n; ++k) {
    if (k == c) continue;
    RawCrossing r;
    r.over_parity = 1;
    r.origin = d.crossings[k].origin;
    r.origin_sign = d.crossings[k].origin_sign;
    for (int s = 0; s < 4; ++s) {
      int y = d.mate(dart(k, s));
      while (dart_crossing(y) == c) y = d.mate(partner(y));
      r.mate[s] = renum(y);
    }
    raw.push_back(r);
  }
  // Closed circles made only of darts at c.
  int loops = d.loops;
  std::vector<bool> seen(4, false);
  for (int k = 0; k < n; ++k)
    for (int s = 0; s < 4 && k != c; ++s) {
      int y = d.mate(dart(k, s));
      while (dart_crossing(y) == c) {
        seen[dart_slot(y)] = seen[dart_slot(partner(y))] = true;
        y = d.mate(partner(y));
      }
    }
  for (int s = 0; s < 4; ++s) {
    if (seen[s]) continue;
    ++loops;
    int x = dart(c, s);
    do {
      seen[dart_slot(x)] = seen[dart_slot(partner(x))] = true;
      x = d.mate(partner(x));
    } while (!seen[dart_slot(x)]);
  }
  return orient_raw(raw, loops, std::vector<int>(4 * raw.size(), -1), false);
}

}  // namespace otl::test
