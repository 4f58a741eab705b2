#include "otl/positivize.hpp"

#include <algorithm>

#include "otl/error.hpp"
#include "otl/invariants.hpp"

namespace otl {

const char* leaf_class_name(LeafClass c) {
  switch (c) {
    case LeafClass::Left: return "LEFT";
    case LeafClass::Middle: return "MIDDLE";
    case LeafClass::Right: return "RIGHT";
  }
  return "?";
}

std::vector<LeafInfo> classify_leaves(const PlaneTree& t3) {
  if (t3.arity() != 3) throw Error(ErrorKind::ArityMismatch, "leaf classes are defined for ternary trees");
  if (t3.is_leaf()) throw Error(ErrorKind::OutOfRange, "a single leaf has no parent to classify against");
  std::vector<LeafInfo> out(t3.leaf_count());
  for (const auto& info : preorder(t3)) {
    if (!info.leaf) continue;
    LeafInfo& li = out[info.first_leaf];
    li.leaf = info.first_leaf;
    li.cls = info.child_index == 0 ? LeafClass::Left : info.child_index == 1 ? LeafClass::Middle : LeafClass::Right;
    li.rightmost = info.first_leaf == t3.leaf_count() - 1;
  }
  return out;
}

namespace {

int crossing_with_origin(const LinkDiagram& d, int edge_id) {
  if (edge_id < 0) return -1;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (d.crossings[c].origin == edge_id) return c;
  return -1;
}

// The bridge run containing incoming dart `in`, rotated so the run is read in traversal order.
std::vector<int> run_containing(const LinkDiagram& d, int in) {
  for (auto& run : bridges(d))
    if (std::find(run.begin(), run.end(), in) != run.end()) return run;
  return {};
}

// Tries to delete negative crossing x without creating crossings or negative crossings.
bool remove_negative(LinkDiagram& d, int x, int max_piece, PositivizeStep& step) {
  for (int s = 0; s < 4; ++s) {
    const int y = dart_crossing(d.mate(dart(x, s)));
    if (y != x && d.sign(y) > 0 && apply_r2(d, x, y)) {
      step.move = "R2";
      step.removed = 2;
      return true;
    }
  }
  bool curl = false;
  if (apply_nugatory(d, x, &curl)) {
    step.move = curl ? "R1" : "nugatory";
    step.removed = 1;
    return true;
  }
  for (int slot : {0, d.crossings[x].over_in}) {
    const int in = dart(x, slot);
    const auto run = run_containing(d, in);
    const int len = static_cast<int>(run.size());
    if (len == 0) continue;
    const int at = static_cast<int>(std::find(run.begin(), run.end(), in) - run.begin());
    const bool closed = d.mate(through(run.back())) == run.front();
    for (int k = 1; k <= std::min(max_piece, closed ? len - 1 : len); ++k) {
      for (int first = at - k + 1; first <= at; ++first) {
        if (!closed && (first < 0 || first + k > len)) continue;
        DetourRequest req;
        int negatives = 0;
        for (int j = 0; j < k; ++j) {
          const int dj = run[((first + j) % len + len) % len];
          req.piece.push_back(dj);
          negatives += d.sign(dart_crossing(dj)) < 0;
        }
        req.max_route = k;
        req.max_route_negative = negatives - 1;
        int p = 0;
        if (apply_detour(d, req, &p)) {
          step.move = "detour";
          step.removed = k;
          step.added = p;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

PositivizeResult positivize_traced(const GroupElement& g, const PositivizeOptions& opt) {
  if (!is_oriented_positive(g))
    throw Error(ErrorKind::NotOrientedPositive, "element is not in the positive oriented monoid");
  const GroupElement h = alpha_inverse(g);
  PositivizeResult res;
  res.ternary_top = h.top();
  const PlaneTree& t = res.ternary_top;
  const int n = t.leaf_count();
  const SignedTaitGraph graph = canonical_coloring(tait_graph(alpha_tree(t), right_vine(n, 2)));
  res.raw = build_diagram(graph);
  LinkDiagram d = res.raw;
  if (t.is_leaf()) {
    res.diagram = d;
    return res;
  }

  std::vector<int> upper(n, -1), lower(n, -1);
  for (const auto& e : graph.edges)
    if (e.v == e.u + 1) (e.sign > 0 ? upper : lower)[e.u] = e.id;
  const auto classes = classify_leaves(t);
  const LaurentPoly reference = opt.certify ? jones(d) : LaurentPoly();
  auto certify = [&](const PositivizeStep& step) {
    if (!opt.certify) return;
    validate(d);
    if (jones(d) != reference)
      throw Error(ErrorKind::Internal, std::string(step.move) + " at leaf " + std::to_string(step.leaf) +
                                           " changed the Jones polynomial");
  };

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = opt.right_to_left ? n - 1 - i : i;
  for (int i : order) {
    const LeafInfo& info = classes[i];
    if (info.rightmost) continue;
    const int x = crossing_with_origin(d, lower[i]);
    if (x < 0) continue;  // already removed by an earlier move
    PositivizeStep step;
    step.leaf = i;
    step.cls = info.cls;
    const int y = info.cls != LeafClass::Right ? crossing_with_origin(d, upper[i]) : -1;
    if (y >= 0 && apply_r2(d, x, y)) {
      step.move = "R2";
      step.removed = 2;
    } else if (!remove_negative(d, x, opt.max_piece, step)) {
      throw Error(ErrorKind::MoveSearchFailed, "no move removes the negative crossing of leaf " + std::to_string(i));
    }
    certify(step);
    res.log.push_back(step);
  }
  if (negative_crossings(d) > 0)
    throw Error(ErrorKind::MoveSearchFailed, std::to_string(negative_crossings(d)) + " negative crossings remain");
  res.diagram = d;
  return res;
}

LinkDiagram positivize(const GroupElement& g, const PositivizeOptions& opt) {
  return positivize_traced(g, opt).diagram;
}

int right_leaf_bound(const GroupElement& g) {
  if (!is_oriented_positive(g))
    throw Error(ErrorKind::NotOrientedPositive, "element is not in the positive oriented monoid");
  return right_leaf_count(alpha_inverse(g).top());
}

nlohmann::json positivize_to_json(const PositivizeResult& r) {
  nlohmann::json log = nlohmann::json::array();
  for (const auto& s : r.log)
    log.push_back({{"leafIndex", s.leaf},
                   {"class", leaf_class_name(s.cls)},
                   {"move", s.move},
                   {"removedCrossings", s.removed},
                   {"addedCrossings", s.added}});
  return {{"tree", print_tree(r.ternary_top)},
          {"rightLeafBound", right_leaf_count(r.ternary_top)},
          {"before", diagram_to_json(r.raw)},
          {"after", diagram_to_json(r.diagram)},
          {"moves", log}};
}

}  // namespace otl
