#include "otl/thompson.hpp"

#include <algorithm>
#include <cctype>

#include "otl/error.hpp"
#include "otl/tait.hpp"

namespace otl {

namespace {

void caret_starts(const PlaneTree& t, int offset, std::vector<int>& out) {
  if (t.is_leaf()) return;
  bool all_leaves = true;
  for (const auto& c : t.children()) all_leaves = all_leaves && c.is_leaf();
  if (all_leaves) {
    out.push_back(offset);
    return;
  }
  for (const auto& c : t.children()) {
    caret_starts(c, offset, out);
    offset += c.leaf_count();
  }
}

PlaneTree collapse_at(const PlaneTree& t, int leaf, int offset) {
  if (t.is_leaf()) return t;
  bool all_leaves = true;
  for (const auto& c : t.children()) all_leaves = all_leaves && c.is_leaf();
  if (all_leaves) return offset == leaf ? PlaneTree(t.arity()) : t;
  std::vector<PlaneTree> kids(t.children());
  for (auto& c : kids) {
    if (leaf < offset + c.leaf_count()) {
      c = collapse_at(c, leaf, offset);
      break;
    }
    offset += c.leaf_count();
  }
  return PlaneTree::node(std::move(kids));
}

// Grafts a caret on every right-child leaf, top-down, so that each node has shape (A,(B,C)).
PlaneTree complete_to_image(const PlaneTree& t) {
  if (t.is_leaf()) return t;
  const PlaneTree right = t.child(1).is_leaf() ? PlaneTree::caret(2) : t.child(1);
  return PlaneTree::node({complete_to_image(t.child(0)),
                          PlaneTree::node({complete_to_image(right.child(0)), complete_to_image(right.child(1))})});
}

PlaneTree decode_image(const PlaneTree& t) {
  if (t.is_leaf()) return PlaneTree(3);
  if (t.child(1).is_leaf()) throw Error(ErrorKind::NotInImage, "tree is not of the form (A,(B,C))");
  return PlaneTree::node({decode_image(t.child(0)), decode_image(t.child(1).child(0)),
                          decode_image(t.child(1).child(1))});
}

}  // namespace

std::pair<PlaneTree, PlaneTree> reduce_pair(const PlaneTree& top, const PlaneTree& bottom) {
  if (top.arity() != bottom.arity()) throw Error(ErrorKind::ArityMismatch, "tree pair arities differ");
  if (top.leaf_count() != bottom.leaf_count()) throw Error(ErrorKind::OutOfRange, "tree pair leaf counts differ");
  PlaneTree a = top, b = bottom;
  for (;;) {
    std::vector<int> sa, sb, common;
    caret_starts(a, 0, sa);
    caret_starts(b, 0, sb);
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    if (common.empty()) break;
    for (auto it = common.rbegin(); it != common.rend(); ++it) {
      a = collapse_at(a, *it, 0);
      b = collapse_at(b, *it, 0);
    }
  }
  return {a, b};
}

GroupElement::GroupElement(int arity) : top_(arity), bottom_(arity) {}

GroupElement::GroupElement(PlaneTree top, PlaneTree bottom) {
  auto [a, b] = reduce_pair(top, bottom);
  top_ = std::move(a);
  bottom_ = std::move(b);
}

// Letters may be separated by whitespace or written back to back ("x0^3x1").
Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  auto number = [&](std::size_t from, std::size_t to, const char* what) {
    try {
      return std::stoi(std::string(text.substr(from, to - from)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, std::string(what) + " out of range near offset " + std::to_string(from));
    }
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != 'x' && text[i] != 'X')
      throw Error(ErrorKind::Parse, "bad token at offset " + std::to_string(i) + " in '" + std::string(text) + "'");
    std::size_t q = digits(i + 1);
    if (q == i + 1) throw Error(ErrorKind::Parse, "missing generator index at offset " + std::to_string(i));
    Letter l;
    l.index = number(i + 1, q, "generator index");
    i = q;
    if (i < text.size() && text[i] == '^') {
      std::size_t from = i + 1;
      if (from < text.size() && (text[from] == '-' || text[from] == '+')) ++from;
      q = digits(from);
      if (q == from) throw Error(ErrorKind::Parse, "bad exponent at offset " + std::to_string(i));
      l.exponent = number(i + 1, q, "exponent");
      if (l.exponent == 0) throw Error(ErrorKind::Parse, "zero exponent at offset " + std::to_string(i));
      i = q;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != 'x' && text[i] != 'X')
      throw Error(ErrorKind::Parse, "bad token at offset " + std::to_string(i) + " in '" + std::string(text) + "'");
    w.push_back(l);
  }
  return w;
}

std::string print_word(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(l.index);
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

GroupElement identity(int arity) { return GroupElement(arity); }

GroupElement generator(int n) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "generator index must be non-negative");
  static const GroupElement x0(parse_tree("((**)*)", 2), parse_tree("(*(**))", 2));
  return shift(x0, n);
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (a.arity() != b.arity()) throw Error(ErrorKind::ArityMismatch, "cannot multiply elements of different arity");
  const PlaneTree c = common_refinement(a.bottom(), b.top());
  const PlaneTree top = graft_all(a.top(), refinement_pieces(a.bottom(), c));
  const PlaneTree bottom = graft_all(b.bottom(), refinement_pieces(b.top(), c));
  return GroupElement(top, bottom);
}

GroupElement inverse(const GroupElement& g) { return GroupElement(g.bottom(), g.top()); }

GroupElement power(const GroupElement& g, int e) {
  GroupElement base = e < 0 ? inverse(g) : g;
  GroupElement out(g.arity());
  for (int k = 0; k < (e < 0 ? -e : e); ++k) out = multiply(out, base);
  return out;
}

GroupElement shift(const GroupElement& g, int times) {
  PlaneTree top = g.top(), bottom = g.bottom();
  const int a = g.arity();
  for (int k = 0; k < times; ++k) {
    std::vector<PlaneTree> wt(static_cast<std::size_t>(a - 1), PlaneTree(a));
    std::vector<PlaneTree> wb = wt;
    wt.push_back(top);
    wb.push_back(bottom);
    top = PlaneTree::node(std::move(wt));
    bottom = PlaneTree::node(std::move(wb));
  }
  return GroupElement(top, bottom);
}

GroupElement evaluate_word(const Word& w) {
  GroupElement out(2);
  for (const auto& l : w) out = multiply(out, power(generator(l.index), l.exponent));
  return out;
}

bool is_positive(const GroupElement& g) { return is_right_vine(g.bottom()); }

PlaneTree alpha_tree(const PlaneTree& t3) {
  if (t3.arity() != 3) throw Error(ErrorKind::ArityMismatch, "alpha expects a ternary tree");
  if (t3.is_leaf()) return PlaneTree(2);
  return PlaneTree::node({alpha_tree(t3.child(0)),
                          PlaneTree::node({alpha_tree(t3.child(1)), alpha_tree(t3.child(2))})});
}

GroupElement alpha(const GroupElement& g3) {
  if (g3.arity() != 3) throw Error(ErrorKind::ArityMismatch, "alpha expects an element of F3");
  return GroupElement(alpha_tree(g3.top()), alpha_tree(g3.bottom()));
}

GroupElement alpha_inverse(const GroupElement& g2) {
  if (g2.arity() != 2) throw Error(ErrorKind::ArityMismatch, "alpha_inverse expects an element of F");
  if (g2.is_identity()) return GroupElement(3);
  if (!is_bipartite(tait_graph(g2))) throw Error(ErrorKind::NotInImage, "Tait graph is not bipartite");
  PlaneTree top = g2.top(), bottom = g2.bottom();
  const int cap = 16 * g2.leaf_count() + 64;
  for (;;) {
    bool changed = false;
    PlaneTree t = complete_to_image(top);
    if (t != top) {
      bottom = graft_all(bottom, refinement_pieces(top, t));
      top = t;
      changed = true;
    }
    PlaneTree b = complete_to_image(bottom);
    if (b != bottom) {
      top = graft_all(top, refinement_pieces(bottom, b));
      bottom = b;
      changed = true;
    }
    if (!changed) break;
    if (top.leaf_count() > cap) throw Error(ErrorKind::NotInImage, "completion did not terminate");
  }
  return GroupElement(decode_image(top), decode_image(bottom));
}

bool is_oriented_positive(const GroupElement& g) {
  return g.arity() == 2 && is_positive(g) && is_bipartite(tait_graph(g));
}

nlohmann::json element_to_json(const GroupElement& g) {
  return nlohmann::json{{"top", print_tree(g.top())}, {"bottom", print_tree(g.bottom())}, {"arity", g.arity()}};
}

GroupElement element_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("top") || !j.contains("bottom"))
    throw Error(ErrorKind::Parse, "element JSON needs \"top\" and \"bottom\"");
  const int a = j.value("arity", 2);
  return GroupElement(parse_tree(j.at("top").get<std::string>(), a), parse_tree(j.at("bottom").get<std::string>(), a));
}

}  // namespace otl
