#pragma once

#include <functional>
#include <string>
#include <vector>

#include "otl/diagram.hpp"
#include "otl/thompson.hpp"

namespace otl {

// Diagrams drawn bottom to top from cups, caps and crossings between neighbouring strands.
// Independent of the Tait-graph construction; used as a reference generator.
class MorseDiagram {
 public:
  // New arc at positions j, j+1; the left end runs upward if `left_up`.
  void cup(int j, bool left_up = true);
  // Oriented cup whose ends carry no direction hint.
  void cup_free(int j);
  void cap(int j);
  // Crossing of strands j and j+1; the over strand runs from lower left to upper right if `over_lr`.
  void cross(int j, bool over_lr);
  int width() const { return static_cast<int>(open_.size()); }
  // All positions must be closed. `oriented` marks the hints as the meaningful orientation.
  LinkDiagram finish(bool oriented) const;

 private:
  std::vector<RawCrossing> raw_;
  std::vector<int> hint_;
  std::vector<int> open_;  // token at each position: dart >= 0, or ~v for virtual end v
  std::vector<int> dir_;   // +1 up, -1 down, 0 unknown
  std::vector<std::pair<int, int>> links_;
  int virtual_count_ = 0;
  void link(int a, int b) { links_.emplace_back(a, b); }
};

// Closure of a braid on `strands` strands; letter +i is sigma_i (positive), -i its inverse (1-based).
LinkDiagram braid_closure(const std::vector<int>& word, int strands);
// Pretzel link P(p_1, ..., p_k) from vertical twist boxes, arbitrary orientation.
LinkDiagram pretzel(const std::vector<int>& twists);
// Two-strand twist with anti-parallel strands, 2n crossings, all positive.
LinkDiagram antiparallel_twist(int n);
// Reverses the components whose index (in component_traversals order) is flagged.
LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<bool>& flip);

// Ternary top trees of the twist-knot and twisted-annulus families.
PlaneTree twist_tree(int n);
PlaneTree annulus_tree(int n);
// Element with the given top tree and a right-vine bottom.
GroupElement positive_element(const PlaneTree& top);
// prod_{i<n} phi^{7i}(x0^2 x1 x3^2 x4)
GroupElement chain_element(int n);

struct ExampleFixture {
  std::string name;
  std::string input_kind;  // "word", "btree" or "ttree"
  std::string input;
  std::string expected;    // description of the reference link
  std::string note;
  // Reference diagram; empty for fixtures checked by component count only.
  std::function<LinkDiagram()> reference;
  int expected_components = -1;  // after strip_trivial, -1 when not checked
  bool compare_unoriented = false;  // compare Jones with whatever orientation the reference has
};

const std::vector<ExampleFixture>& examples_corpus();
const ExampleFixture& find_example(const std::string& name);
GroupElement fixture_element(const ExampleFixture& f);
// Element from a literal: word, binary tree (optionally "top;bottom") or ternary tree.
GroupElement element_from_input(const std::string& kind, const std::string& text);

struct ExampleOutcome {
  bool pass = false;
  int raw_crossings = 0;
  int positive_crossings = 0;
  int components = 0;
  int removed_unknots = 0;
  std::string jones;  // Jones polynomial of the stripped positive diagram, in t
  std::string detail;
};

ExampleOutcome run_example(const ExampleFixture& f);

}  // namespace otl
