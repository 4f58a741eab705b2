#include "otl/trees.hpp"

#include <functional>

#include "otl/error.hpp"

namespace otl {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::MissingColoring: return "MissingColoring";
    case ErrorKind::Unoriented: return "Unoriented";
    case ErrorKind::NotOrientedPositive: return "NotOrientedPositive";
    case ErrorKind::MoveSearchFailed: return "MoveSearchFailed";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::NonLaminar: return "NonLaminar";
    case ErrorKind::InvalidDiagram: return "InvalidDiagram";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

namespace {

const std::vector<PlaneTree>& no_children() {
  static const std::vector<PlaneTree> empty;
  return empty;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

}  // namespace

PlaneTree::PlaneTree(int arity) : arity_(arity) {
  if (arity != 2 && arity != 3) throw Error(ErrorKind::ArityMismatch, "arity must be 2 or 3");
}

PlaneTree PlaneTree::node(std::vector<PlaneTree> children) {
  const int a = static_cast<int>(children.size());
  PlaneTree t(a);
  auto n = std::make_shared<Node>();
  std::size_t h = 0x51ed27;
  for (const auto& c : children) {
    if (c.arity() != a) throw Error(ErrorKind::ArityMismatch, "child arity differs from node arity");
    n->leaves += c.leaf_count();
    n->internals += c.internal_count();
    h = mix(h, c.hash());
  }
  n->internals += 1;
  n->hash = mix(h, static_cast<std::size_t>(n->leaves));
  n->kids = std::move(children);
  t.node_ = std::move(n);
  return t;
}

PlaneTree PlaneTree::caret(int arity) {
  return node(std::vector<PlaneTree>(static_cast<std::size_t>(arity), PlaneTree(arity)));
}

const std::vector<PlaneTree>& PlaneTree::children() const {
  return node_ ? node_->kids : no_children();
}

bool operator==(const PlaneTree& a, const PlaneTree& b) {
  if (a.arity_ != b.arity_) return false;
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return false;
  if (a.node_->hash != b.node_->hash || a.node_->leaves != b.node_->leaves) return false;
  for (std::size_t k = 0; k < a.node_->kids.size(); ++k)
    if (a.node_->kids[k] != b.node_->kids[k]) return false;
  return true;
}

namespace {

struct Parser {
  std::string_view s;
  int arity;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r')) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(pos));
  }
  PlaneTree tree() {
    skip();
    if (pos >= s.size()) fail("unexpected end of tree");
    if (s[pos] == '*') {
      ++pos;
      return PlaneTree(arity);
    }
    if (s[pos] != '(') fail(std::string("unexpected character '") + s[pos] + "'");
    ++pos;
    std::vector<PlaneTree> kids;
    for (;;) {
      skip();
      if (pos >= s.size()) fail("unbalanced parentheses");
      if (s[pos] == ')') break;
      kids.push_back(tree());
    }
    if (static_cast<int>(kids.size()) != arity)
      fail("node has " + std::to_string(kids.size()) + " children, expected " + std::to_string(arity));
    ++pos;
    return PlaneTree::node(std::move(kids));
  }
};

void print_into(const PlaneTree& t, std::string& out) {
  if (t.is_leaf()) {
    out.push_back('*');
    return;
  }
  out.push_back('(');
  for (const auto& c : t.children()) print_into(c, out);
  out.push_back(')');
}

void preorder_into(const PlaneTree& t, int parent, int child_index, int depth, int& next_leaf,
                   std::vector<NodeInfo>& out) {
  NodeInfo info;
  info.id = static_cast<int>(out.size());
  info.parent = parent;
  info.child_index = child_index;
  info.depth = depth;
  info.leaf = t.is_leaf();
  info.first_leaf = next_leaf;
  out.push_back(info);
  if (t.is_leaf()) {
    out[static_cast<std::size_t>(info.id)].last_leaf = next_leaf++;
    return;
  }
  int k = 0;
  for (const auto& c : t.children()) preorder_into(c, info.id, k++, depth + 1, next_leaf, out);
  out[static_cast<std::size_t>(info.id)].last_leaf = next_leaf - 1;
}

// Rebuild t with the subtree at preorder id `target` replaced by f(subtree); `base` is t's own id.
PlaneTree rebuild_at(const PlaneTree& t, int target, int base,
                     const std::function<PlaneTree(const PlaneTree&)>& f) {
  if (base == target) return f(t);
  std::vector<PlaneTree> kids(t.children());
  int id = base + 1;
  for (auto& c : kids) {
    const int size = c.leaf_count() + c.internal_count();
    if (target < id + size) {
      c = rebuild_at(c, target, id, f);
      break;
    }
    id += size;
  }
  return PlaneTree::node(std::move(kids));
}

void pieces_into(const PlaneTree& t, const PlaneTree& r, std::vector<PlaneTree>& out) {
  if (t.is_leaf()) {
    out.push_back(r);
    return;
  }
  if (r.is_leaf() || r.arity() != t.arity())
    throw Error(ErrorKind::Internal, "refinement does not contain the tree as a prefix");
  for (std::size_t k = 0; k < t.children().size(); ++k) pieces_into(t.children()[k], r.children()[k], out);
}

PlaneTree graft_all_from(const PlaneTree& t, const std::vector<PlaneTree>& pieces, std::size_t& next) {
  if (t.is_leaf()) return pieces[next++];
  std::vector<PlaneTree> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(graft_all_from(c, pieces, next));
  return PlaneTree::node(std::move(kids));
}

}  // namespace

PlaneTree parse_tree(std::string_view text, int arity) {
  if (arity != 2 && arity != 3) throw Error(ErrorKind::ArityMismatch, "arity must be 2 or 3");
  Parser p{text, arity};
  p.skip();
  if (p.pos >= text.size()) throw Error(ErrorKind::Parse, "empty tree text");
  PlaneTree t = p.tree();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing characters");
  return t;
}

std::string print_tree(const PlaneTree& t) {
  std::string out;
  out.reserve(static_cast<std::size_t>(t.leaf_count() + 2 * t.internal_count()));
  print_into(t, out);
  return out;
}

int leaf_count(const PlaneTree& t) { return t.leaf_count(); }

std::vector<NodeInfo> preorder(const PlaneTree& t) {
  std::vector<NodeInfo> out;
  out.reserve(static_cast<std::size_t>(t.leaf_count() + t.internal_count()));
  int next_leaf = 0;
  preorder_into(t, -1, -1, 0, next_leaf, out);
  return out;
}

PlaneTree subtree(const PlaneTree& t, int node_id) {
  const int total = t.leaf_count() + t.internal_count();
  if (node_id < 0 || node_id >= total) throw Error(ErrorKind::OutOfRange, "node id out of range");
  const PlaneTree* cur = &t;
  int id = 0;
  while (id != node_id) {
    ++id;
    for (const auto& c : cur->children()) {
      const int size = c.leaf_count() + c.internal_count();
      if (node_id < id + size) {
        cur = &c;
        break;
      }
      id += size;
    }
  }
  return *cur;
}

PlaneTree replace_subtree(const PlaneTree& t, int node_id, const PlaneTree& s) {
  const int total = t.leaf_count() + t.internal_count();
  if (node_id < 0 || node_id >= total) throw Error(ErrorKind::OutOfRange, "node id out of range");
  if (s.arity() != t.arity()) throw Error(ErrorKind::ArityMismatch, "replacement arity differs");
  return rebuild_at(t, node_id, 0, [&](const PlaneTree&) { return s; });
}

std::pair<int, int> left_span(const PlaneTree& t, int node_id) {
  const PlaneTree n = subtree(t, node_id);
  if (n.is_leaf()) throw Error(ErrorKind::OutOfRange, "left_span of a leaf");
  const auto nodes = preorder(t);
  const int first = nodes[static_cast<std::size_t>(node_id)].first_leaf;
  return {first, first + n.child(0).leaf_count() - 1};
}

PlaneTree graft(const PlaneTree& t, int leaf, const PlaneTree& s) {
  if (leaf < 0 || leaf >= t.leaf_count()) throw Error(ErrorKind::OutOfRange, "leaf index out of range");
  if (s.arity() != t.arity()) throw Error(ErrorKind::ArityMismatch, "grafted tree arity differs");
  std::vector<PlaneTree> pieces(static_cast<std::size_t>(t.leaf_count()), PlaneTree(t.arity()));
  pieces[static_cast<std::size_t>(leaf)] = s;
  return graft_all(t, pieces);
}

PlaneTree graft_all(const PlaneTree& t, const std::vector<PlaneTree>& pieces) {
  if (static_cast<int>(pieces.size()) != t.leaf_count())
    throw Error(ErrorKind::OutOfRange, "one piece per leaf required");
  std::size_t next = 0;
  return graft_all_from(t, pieces, next);
}

std::vector<PlaneTree> refinement_pieces(const PlaneTree& t, const PlaneTree& r) {
  std::vector<PlaneTree> out;
  out.reserve(static_cast<std::size_t>(t.leaf_count()));
  pieces_into(t, r, out);
  return out;
}

PlaneTree common_refinement(const PlaneTree& a, const PlaneTree& b) {
  if (a.arity() != b.arity()) throw Error(ErrorKind::ArityMismatch, "refinement of trees with different arity");
  if (a.is_leaf()) return b;
  if (b.is_leaf()) return a;
  std::vector<PlaneTree> kids;
  kids.reserve(a.children().size());
  for (std::size_t k = 0; k < a.children().size(); ++k)
    kids.push_back(common_refinement(a.children()[k], b.children()[k]));
  return PlaneTree::node(std::move(kids));
}

bool is_right_vine(const PlaneTree& t) {
  const PlaneTree* cur = &t;
  while (!cur->is_leaf()) {
    const auto& kids = cur->children();
    for (std::size_t k = 0; k + 1 < kids.size(); ++k)
      if (!kids[k].is_leaf()) return false;
    cur = &kids.back();
  }
  return true;
}

PlaneTree right_vine(int leaves, int arity) {
  if (leaves < 1 || (leaves - 1) % (arity - 1) != 0)
    throw Error(ErrorKind::OutOfRange, "no right vine with " + std::to_string(leaves) + " leaves");
  PlaneTree t(arity);
  for (int n = 1; n < leaves; n += arity - 1) {
    std::vector<PlaneTree> kids(static_cast<std::size_t>(arity - 1), PlaneTree(arity));
    kids.push_back(t);
    t = PlaneTree::node(std::move(kids));
  }
  return t;
}

int right_leaf_count(const PlaneTree& t) {
  if (t.is_leaf()) return 0;
  int n = t.children().back().is_leaf() ? 1 : 0;
  for (const auto& c : t.children()) n += right_leaf_count(c);
  return n;
}

nlohmann::json tree_to_json(const PlaneTree& t) {
  return nlohmann::json{{"arity", t.arity()}, {"tree", print_tree(t)}};
}

PlaneTree tree_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("tree")) throw Error(ErrorKind::Parse, "tree JSON needs a \"tree\" field");
  return parse_tree(j.at("tree").get<std::string>(), j.value("arity", 2));
}

}  // namespace otl
