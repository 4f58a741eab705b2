#include "otl/fixtures.hpp"

#include "otl/error.hpp"
#include "otl/invariants.hpp"
#include "otl/positivize.hpp"

namespace otl {

void MorseDiagram::cup(int j, bool left_up) {
  if (j < 0 || j > width()) throw Error(ErrorKind::OutOfRange, "cup position out of range");
  const int v = virtual_count_;
  virtual_count_ += 2;
  link(~v, ~(v + 1));
  open_.insert(open_.begin() + j, {~v, ~(v + 1)});
  dir_.insert(dir_.begin() + j, {left_up ? 1 : -1, left_up ? -1 : 1});
}

void MorseDiagram::cup_free(int j) {
  cup(j);
  dir_[j] = dir_[j + 1] = 0;
}

void MorseDiagram::cap(int j) {
  if (j < 0 || j + 1 >= width()) throw Error(ErrorKind::OutOfRange, "cap position out of range");
  link(open_[j], open_[j + 1]);
  open_.erase(open_.begin() + j, open_.begin() + j + 2);
  dir_.erase(dir_.begin() + j, dir_.begin() + j + 2);
}

void MorseDiagram::cross(int j, bool over_lr) {
  if (j < 0 || j + 1 >= width()) throw Error(ErrorKind::OutOfRange, "crossing position out of range");
  // Slots counterclockwise from the lower left: SW, SE, NE, NW.
  const int c = static_cast<int>(raw_.size());
  RawCrossing x;
  x.over_parity = over_lr ? 0 : 1;
  raw_.push_back(x);
  hint_.resize(hint_.size() + 4, -1);
  link(open_[j], dart(c, 0));
  link(open_[j + 1], dart(c, 1));
  auto set_dir = [&](int lower, int upper, int dir) {
    if (dir == 0) return;
    hint_[dart(c, lower)] = dir > 0 ? 0 : 1;
    hint_[dart(c, upper)] = dir > 0 ? 1 : 0;
  };
  set_dir(0, 2, dir_[j]);
  set_dir(1, 3, dir_[j + 1]);
  open_[j] = dart(c, 3);
  open_[j + 1] = dart(c, 2);
  std::swap(dir_[j], dir_[j + 1]);
}

LinkDiagram MorseDiagram::finish(bool oriented) const {
  if (!open_.empty()) throw Error(ErrorKind::InvalidDiagram, "diagram has open strands");
  std::vector<RawCrossing> raw = raw_;
  std::vector<std::vector<int>> vadj(virtual_count_);
  std::vector<int> dart_link(4 * raw.size(), 0);
  std::vector<char> dart_seen(4 * raw.size(), 0);
  for (auto [a, b] : links_) {
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      if (x < 0) vadj[~x].push_back(y);
      else dart_link[x] = y;
    }
  }
  std::vector<char> vseen(virtual_count_, 0);
  // Follows virtual ends from token `from` (entered from `prev`) until a dart is reached.
  auto follow = [&](int prev, int from) {
    while (from < 0) {
      const int v = ~from;
      vseen[v] = 1;
      const int next = vadj[v][0] == prev ? vadj[v][1] : vadj[v][0];
      prev = from;
      from = next;
    }
    return from;
  };
  for (int x = 0; x < static_cast<int>(dart_link.size()); ++x) {
    if (dart_seen[x]) continue;
    const int y = follow(x, dart_link[x]);
    raw[dart_crossing(x)].mate[dart_slot(x)] = y;
    raw[dart_crossing(y)].mate[dart_slot(y)] = x;
    dart_seen[x] = dart_seen[y] = 1;
  }
  int loops = 0;
  for (int v = 0; v < virtual_count_; ++v) {
    if (vseen[v]) continue;
    ++loops;
    int prev = ~v, cur = vadj[v][0];
    vseen[v] = 1;
    while (cur != ~v) {
      vseen[~cur] = 1;
      const int next = vadj[~cur][0] == prev ? vadj[~cur][1] : vadj[~cur][0];
      prev = cur;
      cur = next;
    }
  }
  return orient_raw(raw, loops, hint_, oriented);
}

LinkDiagram braid_closure(const std::vector<int>& word, int strands) {
  MorseDiagram m;
  for (int k = 0; k < strands; ++k) m.cup(k);
  for (int letter : word) {
    const int i = letter > 0 ? letter : -letter;
    if (letter == 0 || i >= strands) throw Error(ErrorKind::OutOfRange, "braid letter out of range");
    m.cross(i - 1, letter > 0);
  }
  for (int k = strands - 1; k >= 0; --k) m.cap(k);
  return m.finish(true);
}

LinkDiagram pretzel(const std::vector<int>& twists) {
  const int k = static_cast<int>(twists.size());
  if (k < 1) throw Error(ErrorKind::OutOfRange, "pretzel needs at least one twist box");
  MorseDiagram m;
  m.cup_free(0);
  for (int i = 0; i + 1 < k; ++i) m.cup_free(2 * i + 1);
  // Positive boxes have the over strand from lower left to upper right.
  for (int i = 0; i < k; ++i)
    for (int r = 0; r < (twists[i] > 0 ? twists[i] : -twists[i]); ++r) m.cross(2 * i, twists[i] > 0);
  for (int i = k - 2; i >= 0; --i) m.cap(2 * i + 1);
  m.cap(0);
  return m.finish(false);
}

LinkDiagram antiparallel_twist(int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "twist count must be positive");
  auto build = [n](bool over_lr) {
    MorseDiagram m;
    m.cup(0, true);
    m.cup(1, false);
    for (int r = 0; r < 2 * n; ++r) m.cross(0, over_lr);
    m.cap(1);
    m.cap(0);
    return m.finish(true);
  };
  LinkDiagram d = build(true);
  return writhe(d) > 0 ? d : build(false);
}

LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<bool>& flip) {
  const auto comps = component_traversals(d);
  std::vector<int> comp_of(4 * d.crossing_count(), 0);
  for (int k = 0; k < static_cast<int>(comps.size()); ++k)
    for (int in : comps[k]) comp_of[in] = comp_of[through(in)] = k;
  std::vector<RawCrossing> raw(d.crossing_count());
  std::vector<int> hint(4 * d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    raw[c].mate = d.crossings[c].mate;
    raw[c].over_parity = 1;
    raw[c].origin = d.crossings[c].origin;
    raw[c].origin_sign = d.crossings[c].origin_sign;
    for (int s = 0; s < 4; ++s) {
      const int x = dart(c, s);
      const bool f = comp_of[x] < static_cast<int>(flip.size()) && flip[comp_of[x]];
      hint[x] = (d.is_out(x) != f) ? 1 : 0;
    }
  }
  return orient_raw(raw, d.loops, hint, d.oriented);
}

namespace {

PlaneTree hang() { return PlaneTree::caret(3); }

// (h, h, (h, h, (..., *))) with `pairs` nested nodes.
PlaneTree hang_chain(int pairs) {
  PlaneTree x(3);
  for (int k = 0; k < pairs; ++k) x = PlaneTree::node({hang(), hang(), x});
  return x;
}

}  // namespace

PlaneTree twist_tree(int n) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "twist index must be non-negative");
  const PlaneTree base = PlaneTree::node({hang(), hang(), PlaneTree(3)});
  const PlaneTree left = PlaneTree::node({base, hang(), hang_chain(n)});
  return PlaneTree::node({left, PlaneTree(3), PlaneTree(3)});
}

PlaneTree annulus_tree(int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "annulus twist count must be positive");
  return PlaneTree::node({hang_chain(n), PlaneTree(3), PlaneTree(3)});
}

GroupElement positive_element(const PlaneTree& top) {
  return GroupElement(top, right_vine(top.leaf_count(), top.arity()));
}

GroupElement chain_element(int n) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "chain length must be non-negative");
  const GroupElement hopf = evaluate_word(parse_word("x0^2 x1 x3^2 x4"));
  GroupElement out(2);
  for (int i = 0; i < n; ++i) out = out * shift(hopf, 7 * i);
  return out;
}

GroupElement element_from_input(const std::string& kind, const std::string& text) {
  if (kind == "word") return evaluate_word(parse_word(text));
  if (kind == "btree" || kind == "ttree") {
    const int arity = kind == "btree" ? 2 : 3;
    const auto semi = text.find(';');
    const PlaneTree top = parse_tree(text.substr(0, semi), arity);
    const PlaneTree bottom =
        semi == std::string::npos ? right_vine(top.leaf_count(), arity) : parse_tree(text.substr(semi + 1), arity);
    const GroupElement g(top, bottom);
    return arity == 2 ? g : alpha(g);
  }
  throw Error(ErrorKind::Parse, "unknown input kind '" + kind + "' (expected word, btree or ttree)");
}

GroupElement fixture_element(const ExampleFixture& f) { return element_from_input(f.input_kind, f.input); }

const std::vector<ExampleFixture>& examples_corpus() {
  static const std::vector<ExampleFixture> corpus = [] {
    const std::vector<int> trefoil{1, 1, 1};
    const std::vector<int> knot_5_2{1, 1, 1, 2, -1, 2};
    const std::vector<int> knot_7_2{1, 1, 1, 2, -1, 2, 3, -2, 3};
    const std::vector<int> knot_7_4{1, 1, 2, -1, 2, 2, 3, -2, 3};
    std::vector<ExampleFixture> c;
    c.push_back({"trefoil", "word", "x0^3 x1 x3^2 x4 x7^2 x8", "right-handed trefoil",
                 "reference: closure of the 2-braid s1^3", [=] { return braid_closure(trefoil, 2); }, 1});
    c.push_back({"hopf", "word", "x0^2 x1 x3^2 x4", "positive Hopf link",
                 "reference: closure of the 2-braid s1^2", [] { return braid_closure({1, 1}, 2); }, 2});
    c.push_back({"twist-0", "ttree", print_tree(twist_tree(0)), "3_1 (first twist knot)",
                 "twist family tree for n = 0; reference s1^3", [=] { return braid_closure(trefoil, 2); }, 1});
    c.push_back({"twist-1", "ttree", print_tree(twist_tree(1)), "positive 5_2",
                 "twist family tree for n = 1; reference s1^3 s2 s1^-1 s2",
                 [=] { return braid_closure(knot_5_2, 3); }, 1});
    c.push_back({"twist-2", "ttree", print_tree(twist_tree(2)), "positive 7_2",
                 "twist family tree for n = 2; reference s1^3 s2 s1^-1 s2 s3 s2^-1 s3",
                 [=] { return braid_closure(knot_7_2, 4); }, 1});
    c.push_back({"7_4", "word", "x0^3 x1 x3^2 x4 x6^2 x7 x9^2 x10 x13^2 x14 x16^2 x17 x19^2 x20", "positive 7_4",
                 "reference: closure of s1^2 s2 s1^-1 s2^2 s3 s2^-1 s3",
                 [=] { return braid_closure(knot_7_4, 4); }, 1});
    c.push_back({"granny", "word", "x0^3 x1 x3^2 x4 x7^2 x8 x11^3 x12 x14^2 x15 x18^2 x19", "granny knot",
                 "trefoil word times its shift by 11; reference s1^3 s2^3",
                 [] { return braid_closure({1, 1, 1, 2, 2, 2}, 3); }, 1});
    c.push_back({"annulus-1", "ttree", print_tree(annulus_tree(1)), "(2,2) torus link, anti-parallel",
                 "boundary of a once-twisted annulus; reference anti-parallel 2-strand twist",
                 [] { return antiparallel_twist(1); }, 2});
    c.push_back({"annulus-2", "ttree", print_tree(annulus_tree(2)), "(2,4) torus link, anti-parallel",
                 "boundary of a twice-twisted annulus; reference anti-parallel 2-strand twist",
                 [] { return antiparallel_twist(2); }, 2});
    ExampleFixture pz{"pretzel", "btree",
                      "((((((*(**))((*(**))*))((*(**))*))((((*(**))((*(**))*))((*(**))*))((((*(**))((*(**))*))((*(**))*))"
                      "((((*(**))((*(**))*))((*(**))*))*))))((*(**))*))(**))",
                      "pretzel knot P(3,3,3,3,-2)", "binary top tree with 51 leaves; reference twist-box generator",
                      [] { return pretzel({3, 3, 3, 3, -2}); }, 1};
    pz.compare_unoriented = true;
    c.push_back(pz);
    for (int n = 2; n <= 3; ++n) {
      Word w;
      for (int i = 0; i < n; ++i)
        for (const Letter& l : parse_word("x0^2 x1 x3^2 x4")) w.push_back({l.index + 7 * i, l.exponent});
      // n Hopf clasps in a row: closure of s1^2 s2^2 ... sn^2 on n+1 strands.
      std::vector<int> braid;
      for (int i = 1; i <= n; ++i) braid.insert(braid.end(), {i, i});
      c.push_back({"chain-" + std::to_string(n), "word", print_word(w),
                   "chain of " + std::to_string(n + 1) + " unknots, consecutive ones Hopf-linked",
                   "product of shifts by 7i of the Hopf word; reference closure of s1^2 ... s" + std::to_string(n) + "^2",
                   [braid, n] { return braid_closure(braid, n + 1); }, n + 1});
    }
    return c;
  }();
  return corpus;
}

const ExampleFixture& find_example(const std::string& name) {
  for (const auto& f : examples_corpus())
    if (f.name == name) return f;
  throw Error(ErrorKind::OutOfRange, "no example named '" + name + "'");
}

ExampleOutcome run_example(const ExampleFixture& f) {
  ExampleOutcome out;
  const GroupElement g = fixture_element(f);
  if (!is_oriented_positive(g)) {
    out.detail = "element is not oriented positive";
    return out;
  }
  const PositivizeResult pr = positivize_traced(g);
  out.raw_crossings = pr.raw.crossing_count();
  out.positive_crossings = pr.diagram.crossing_count();
  auto [stripped, removed] = strip_trivial(pr.diagram);
  out.components = components(stripped);
  out.removed_unknots = removed;
  out.jones = to_t_string(jones(stripped));
  bool ok = negative_crossings(pr.diagram) == 0 && stripped.crossing_count() <= right_leaf_bound(g);
  if (!ok) out.detail = "positivized diagram violates the right-leaf bound";
  if (f.expected_components >= 0 && out.components != f.expected_components) {
    ok = false;
    out.detail = "expected " + std::to_string(f.expected_components) + " components, got " +
                 std::to_string(out.components);
  }
  if (ok && f.reference) {
    const LinkDiagram ref = f.reference();
    bool same = false;
    if (f.compare_unoriented) {
      // Knots: Jones does not depend on the orientation, so any consistent one will do.
      auto [rs, rr] = strip_trivial(ref);
      (void)rr;
      const int k = components(stripped) - components(rs);
      const LaurentPoly a = jones_any(stripped), b = jones_any(rs);
      same = k >= 0 ? a == b * loop_value().pow(k) : b == a * loop_value().pow(-k);
    } else {
      same = equal_up_to_unknots(pr.diagram, ref);
    }
    if (!same) {
      ok = false;
      out.detail = "Jones polynomial differs from the reference " + f.expected;
    }
  }
  out.pass = ok;
  if (ok) out.detail = "matches " + f.expected;
  return out;
}

}  // namespace otl
