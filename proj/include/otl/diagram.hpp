#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "otl/tait.hpp"

namespace otl {

// Dart d = 4*c + s is the end of an arc at slot s of crossing c. Slots run counterclockwise;
// slots 0 and 2 are the under strand (0 incoming, 2 outgoing), slots 1 and 3 the over strand.
// The diagram always carries a consistent orientation; `oriented` records whether it is the
// meaningful one (from a coloring or an oriented PD) or an arbitrary internal choice.
struct Crossing {
  std::array<int, 4> mate{};  // dart at the other end of the arc leaving each slot
  int over_in = 1;            // 1 or 3: incoming slot of the over strand
  int origin = -1;            // Tait edge id this crossing came from, -1 if created by a move
  int origin_sign = 0;        // sign of that Tait edge
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  int loops = 0;  // crossingless components
  bool oriented = false;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int mate(int d) const { return crossings[d >> 2].mate[d & 3]; }
  bool is_out(int d) const;
  int sign(int c) const { return crossings[c].over_in == 3 ? 1 : -1; }
};

inline int dart(int c, int s) { return 4 * c + s; }
inline int dart_crossing(int d) { return d >> 2; }
inline int dart_slot(int d) { return d & 3; }
inline int through(int d) { return d ^ 2; }
inline bool is_over_slot(int s) { return (s & 1) != 0; }

// Unoriented crossing as drawn: counterclockwise mates and which slot parity is over.
struct RawCrossing {
  std::array<int, 4> mate{};
  int over_parity = 1;
  int origin = -1;
  int origin_sign = 0;
};

// `out_hint[d]` = 1 (outgoing), 0 (incoming) or -1 (unknown). Components without hints get an
// arbitrary direction. Throws InvalidDiagram if hints contradict each other.
LinkDiagram orient_raw(const std::vector<RawCrossing>& raw, int loops, const std::vector<int>& out_hint,
                       bool oriented);

LinkDiagram build_diagram(const SignedTaitGraph& g);
LinkDiagram orient(const LinkDiagram& d, const SignedTaitGraph& colored);
LinkDiagram diagram_of(const GroupElement& g);  // canonically oriented; NotBipartite otherwise

std::vector<int> crossing_signs(const LinkDiagram& d);
int writhe(const LinkDiagram& d);
int components(const LinkDiagram& d);
// Component traversals as sequences of incoming darts, ordered by lowest crossing visited.
std::vector<std::vector<int>> component_traversals(const LinkDiagram& d);
int negative_crossings(const LinkDiagram& d);

// Faces as orbits of d -> cw(mate(d)); face_of[d] is the face on the left of the arc leaving d.
std::vector<int> face_of_darts(const LinkDiagram& d, int& faces);
// Structural checks: mates form an involution, orientation is consistent, Euler holds.
void validate(const LinkDiagram& d);
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);
LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram reverse(const LinkDiagram& d);

struct MoveRecord {
  std::string kind;  // "R1", "R2", "nugatory", "detour"
  int removed = 0;
  int added = 0;
};

struct SimplifyOptions {
  bool detours = true;
  int max_piece = 6;
  bool verify = false;  // recompute the Jones polynomial after every move
};

LinkDiagram simplify(const LinkDiagram& d, std::vector<MoveRecord>* log = nullptr,
                     const SimplifyOptions& opt = {});
std::pair<LinkDiagram, int> strip_trivial(const LinkDiagram& d);

// Elementary rewrites; each returns false and leaves `d` unchanged if not applicable.
bool apply_r2(LinkDiagram& d, int c1, int c2);
bool apply_nugatory(LinkDiagram& d, int c, bool* was_curl = nullptr);
bool is_nugatory(const LinkDiagram& d, int c);

struct DetourRequest {
  std::vector<int> piece;  // incoming darts of consecutive crossings along one strand, all over or all under
  int max_route = -1;      // longest allowed replacement, default piece length - 1
  int max_route_negative = -1;  // cap on negative crossings in the route, -1 = unlimited
};
// Reroutes the piece along a shortest dual path with the same over/under status.
bool apply_detour(LinkDiagram& d, const DetourRequest& req, int* route_length = nullptr);
// Maximal over (or under) runs along each component, as incoming darts.
std::vector<std::vector<int>> bridges(const LinkDiagram& d);

struct PDCode {
  std::vector<std::array<int, 4>> x;
  int loops = 0;
};

PDCode to_pd(const LinkDiagram& d);
std::string print_pd(const PDCode& pd);
PDCode parse_pd(std::string_view text);
LinkDiagram from_pd(const PDCode& pd);
std::string to_gauss(const LinkDiagram& d);
nlohmann::json diagram_to_json(const LinkDiagram& d);

}  // namespace otl
